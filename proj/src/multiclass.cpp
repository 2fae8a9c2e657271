#include "vertexlab/multiclass.hpp"

#include <numeric>

namespace vertexlab {

bool class_is_effective(const ClassVector& v) {
    bool nonzero = false;
    for (auto x : v) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

std::int64_t class_degree(const ClassVector& v, const std::vector<std::int64_t>& weights) {
    if (v.size() != weights.size())
        throw ValidationError("class vector rank does not match degree weights");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += weights[i] * v[i];
    return d;
}

std::int64_t class_divisibility(const ClassVector& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

ClassVector class_divide(const ClassVector& v, std::int64_t r) {
    ClassVector w = v;
    for (auto& x : w) {
        if (x % r != 0) throw ValidationError("class not divisible by r");
        x /= r;
    }
    return w;
}

ClassVector class_add(const ClassVector& a, const ClassVector& b) {
    if (a.size() != b.size()) throw ValidationError("class rank mismatch");
    ClassVector r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

ClassVector class_scale(const ClassVector& a, std::int64_t k) {
    ClassVector r = a;
    for (auto& x : r) x *= k;
    return r;
}

void MultiClassSeries::add_term(const ClassVector& cls, const HalfLaurentSeries& s) {
    if (!class_is_effective(cls))
        throw ValidationError("multi-class term with non-effective class");
    if (degree(cls) > cutoff)
        throw ValidationError("multi-class term beyond degree cutoff");
    auto it = terms.find(cls);
    if (it == terms.end())
        terms.emplace(cls, s);
    else
        it->second = it->second + s;
}

HalfLaurentSeries MultiClassSeries::term_or_zero(const ClassVector& cls) const {
    auto it = terms.find(cls);
    if (it != terms.end()) return it->second;
    return HalfLaurentSeries(); // exact zero
}

namespace {
void check_compatible(const MultiClassSeries& a, const MultiClassSeries& b) {
    if (a.weights != b.weights || a.cutoff != b.cutoff)
        throw ValidationError("multi-class operands disagree on weights or cutoff");
}
} // namespace

MultiClassSeries mc_add(const MultiClassSeries& a, const MultiClassSeries& b) {
    check_compatible(a, b);
    MultiClassSeries r = a;
    r.constant += b.constant;
    for (const auto& [cls, s] : b.terms) r.add_term(cls, s);
    return r;
}

MultiClassSeries mc_scale(const MultiClassSeries& a, const Rat& c) {
    MultiClassSeries r(a.weights, a.cutoff, a.constant * c);
    for (const auto& [cls, s] : a.terms) r.terms.emplace(cls, scale(s, c));
    return r;
}

MultiClassSeries mc_mul(const MultiClassSeries& a, const MultiClassSeries& b) {
    check_compatible(a, b);
    MultiClassSeries r(a.weights, a.cutoff, a.constant * b.constant);
    if (b.constant != 0)
        for (const auto& [cls, s] : a.terms) r.add_term(cls, scale(s, b.constant));
    if (a.constant != 0)
        for (const auto& [cls, s] : b.terms) r.add_term(cls, scale(s, a.constant));
    for (const auto& [ca, sa] : a.terms) {
        std::int64_t da = a.degree(ca);
        for (const auto& [cb, sb] : b.terms) {
            if (da + b.degree(cb) > r.cutoff) continue;
            r.add_term(class_add(ca, cb), sa * sb);
        }
    }
    return r;
}

MultiClassSeries graded_exp(const MultiClassSeries& f) {
    if (f.constant != 0)
        throw ValidationError("graded_exp: class-0 part must vanish");
    MultiClassSeries z(f.weights, f.cutoff, Rat(1));
    if (f.terms.empty()) return z;
    std::int64_t min_deg = f.cutoff + 1;
    for (const auto& [cls, s] : f.terms) {
        (void)s;
        min_deg = std::min(min_deg, f.degree(cls));
    }
    if (min_deg < 1) throw ValidationError("graded_exp: class of degree < 1");
    MultiClassSeries power = f; // f^k / k!
    std::int64_t k = 1;
    while (true) {
        z = mc_add(z, power);
        ++k;
        if (k * min_deg > f.cutoff) break;
        power = mc_scale(mc_mul(power, f), Rat(1) / Rat(static_cast<long>(k)));
        if (power.terms.empty()) break;
    }
    return z;
}

MultiClassSeries graded_log(const MultiClassSeries& z) {
    if (z.constant != 1)
        throw ValidationError("graded_log: class-0 part must be 1");
    MultiClassSeries a = z;
    a.constant = 0;
    MultiClassSeries f(z.weights, z.cutoff, Rat(0));
    if (a.terms.empty()) return f;
    std::int64_t min_deg = z.cutoff + 1;
    for (const auto& [cls, s] : a.terms) {
        (void)s;
        min_deg = std::min(min_deg, z.degree(cls));
    }
    if (min_deg < 1) throw ValidationError("graded_log: class of degree < 1");
    MultiClassSeries power = a; // a^k
    std::int64_t k = 1;
    while (true) {
        Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
        f = mc_add(f, mc_scale(power, sign / Rat(static_cast<long>(k))));
        ++k;
        if (k * min_deg > z.cutoff) break;
        power = mc_mul(power, a);
        if (power.terms.empty()) break;
    }
    return f;
}

bool mc_equal_on_common(const MultiClassSeries& a, const MultiClassSeries& b) {
    check_compatible(a, b);
    if (a.constant != b.constant) return false;
    for (const auto& [cls, s] : a.terms)
        if (!equal_on_common(s, b.term_or_zero(cls))) return false;
    for (const auto& [cls, s] : b.terms)
        if (a.terms.find(cls) == a.terms.end() && !equal_on_common(s, a.term_or_zero(cls)))
            return false;
    return true;
}

} // namespace vertexlab
