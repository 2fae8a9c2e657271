#include "vertexlab/rational_function.hpp"

#include <algorithm>
#include <sstream>

namespace vertexlab {
namespace polydetail {

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_zero(const Poly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

int deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return trim(std::move(r));
}

Poly scale(const Poly& a, const Rat& c) {
    Poly r = a;
    for (auto& x : r) x *= c;
    return trim(std::move(r));
}

Poly rem(Poly a, const Poly& b) {
    a = trim(std::move(a));
    int db = deg(b);
    if (db < 0) throw ValidationError("polynomial remainder by zero");
    const Rat& lead = b[static_cast<std::size_t>(db)];
    while (true) {
        int da = deg(a);
        if (da < db) break;
        Rat f = a[static_cast<std::size_t>(da)] / lead;
        int shift = da - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(i + shift)] -= f * b[static_cast<std::size_t>(i)];
        a = trim(std::move(a));
    }
    return a;
}

Poly gcd_monic(Poly a, Poly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!is_zero(b)) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (is_zero(a)) return a;
    int d = deg(a);
    return scale(a, Rat(1) / a[static_cast<std::size_t>(d)]);
}

} // namespace polydetail

using namespace polydetail;

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(trim(std::move(num))), den_(trim(std::move(den))) {
    if (polydetail::is_zero(den_)) throw ValidationError("rational function with zero denominator");
    if (polydetail::is_zero(num_)) {
        num_.clear();
        den_ = {Rat(1)};
        return;
    }
    Poly g = gcd_monic(num_, den_);
    if (deg(g) > 0) {
        // exact division by the gcd via remainder-free euclidean steps
        auto divexact = [](const Poly& p, const Poly& d) {
            Poly q(p.size(), Rat(0));
            Poly r = p;
            int dd = deg(d);
            const Rat& lead = d[static_cast<std::size_t>(dd)];
            while (true) {
                int dr = deg(r);
                if (dr < dd) break;
                Rat f = r[static_cast<std::size_t>(dr)] / lead;
                q[static_cast<std::size_t>(dr - dd)] = f;
                for (int i = 0; i <= dd; ++i)
                    r[static_cast<std::size_t>(i + dr - dd)] -= f * d[static_cast<std::size_t>(i)];
                r = trim(std::move(r));
            }
            if (!polydetail::is_zero(r)) throw ConsistencyError("gcd division left a remainder");
            return trim(std::move(q));
        };
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    // monic denominator
    Rat lead = den_[static_cast<std::size_t>(deg(den_))];
    num_ = scale(num_, Rat(1) / lead);
    den_ = scale(den_, Rat(1) / lead);
}

RationalFunction RationalFunction::from_strings(const std::vector<std::string>& num,
                                                const std::vector<std::string>& den) {
    Poly n, d;
    n.reserve(num.size());
    d.reserve(den.size());
    for (const auto& s : num) n.push_back(rat_from_string(s));
    for (const auto& s : den) d.push_back(rat_from_string(s));
    return RationalFunction(std::move(n), std::move(d));
}

HalfLaurentSeries RationalFunction::expand(std::int64_t hi_req) const {
    if (is_zero()) return HalfLaurentSeries::zero(0, q_key(hi_req));
    // factor out the q-order of numerator and denominator, then invert the
    // unit part of the denominator
    std::size_t ord_n = 0, ord_d = 0;
    while (num_[ord_n] == 0) ++ord_n;
    while (den_[ord_d] == 0) ++ord_d;
    std::int64_t shift = static_cast<std::int64_t>(ord_n) - static_cast<std::int64_t>(ord_d);

    HalfLaurentSeries n(0, HalfLaurentSeries::kInf);
    for (std::size_t i = ord_n; i < num_.size(); ++i)
        n.set(q_key(static_cast<std::int64_t>(i - ord_n)), num_[i]);
    HalfLaurentSeries d(0, HalfLaurentSeries::kInf);
    for (std::size_t i = ord_d; i < den_.size(); ++i)
        d.set(q_key(static_cast<std::int64_t>(i - ord_d)), den_[i]);

    std::int64_t rel_hi = hi_req - shift; // order needed before the final shift
    if (rel_hi < 0) rel_hi = 0;
    HalfLaurentSeries inv = inverse(d, q_key(rel_hi));
    HalfLaurentSeries unit = truncated_to(n * inv, q_key(rel_hi));
    return shift_keys(unit, q_key(shift));
}

bool RationalFunction::symmetric_under_q_inverse() const {
    if (is_zero()) return true;
    auto reversed = [](const Poly& p) {
        Poly r(p.rbegin(), p.rend());
        return trim(std::move(r));
    };
    int dn = deg(num_), dd = deg(den_);
    Poly revN = reversed(num_), revD = reversed(den_);
    // R(1/q) = revN(q) q^(dd-dn) / revD(q); cross-multiplied equality:
    //   num * revD * q^s_l == den * revN * q^s_r  with the q-shift on the
    //   side that keeps both exponents non-negative.
    Poly lhs = mul(num_, revD);
    Poly rhs = mul(den_, revN);
    int s = dd - dn;
    auto shift_poly = [](Poly p, int k) {
        Poly r(static_cast<std::size_t>(k), Rat(0));
        r.insert(r.end(), p.begin(), p.end());
        return r;
    };
    if (s >= 0)
        rhs = shift_poly(std::move(rhs), s);
    else
        lhs = shift_poly(std::move(lhs), -s);
    return trim(std::move(lhs)) == trim(std::move(rhs));
}

std::string RationalFunction::to_string() const {
    auto poly_str = [](const Poly& p) {
        if (polydetail::is_zero(p)) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            bool neg = p[i] < 0;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            Rat a = abs(p[i]);
            if (i == 0 || a != 1) os << rat_to_string(a);
            if (i > 0 && a != 1) os << "*";
            if (i == 1) os << "q";
            if (i > 1) os << "q^" << i;
        }
        return os.str();
    };
    return "(" + poly_str(num_) + ") / (" + poly_str(den_) + ")";
}

} // namespace vertexlab
