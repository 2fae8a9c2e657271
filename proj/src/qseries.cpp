#include "vertexlab/qseries.hpp"

#include <sstream>

namespace vertexlab {

HalfLaurentSeries one_plus_q_pow(long e, std::int64_t hi_req_int) {
    if (e >= 0) {
        HalfLaurentSeries s(0, HalfLaurentSeries::kInf);
        for (long d = 0; d <= e; ++d)
            s.set(q_key(d), Rat(binomial_general(Int(e), static_cast<std::uint64_t>(d))));
        return s;
    }
    HalfLaurentSeries s(0, q_key(hi_req_int));
    for (std::int64_t d = 0; d <= hi_req_int; ++d)
        s.set(q_key(d), Rat(binomial_general(Int(e), static_cast<std::uint64_t>(d))));
    return s;
}

HalfLaurentSeries subst_neg_power(const HalfLaurentSeries& s, long r) {
    if (r < 1) throw ValidationError("subst_neg_power: r must be positive");
    QKey lo = r * s.lo();
    QKey hi = s.exact() ? HalfLaurentSeries::kInf : r * s.hi();
    HalfLaurentSeries out(lo, hi);
    const bool r_even = (r % 2 == 0);
    for (const auto& [k, c] : s.terms()) {
        if (r_even && (k % 2 != 0))
            throw ValidationError(
                "subst_neg_power: half-integer exponent under even scaling leaves the field");
        // sign = ((-1)^(r+1))^(k/2); for odd r this is +1.
        Rat v = c;
        if (r_even && ((k / 2) % 2 != 0)) v = -v;
        out.set(r * k, v);
    }
    return out;
}

namespace {

std::string rat_abs_str(const Rat& c) {
    Rat a = abs(c);
    return rat_to_string(a);
}

} // namespace

std::string render_q(const HalfLaurentSeries& s) {
    if (s.is_zero_on_window()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mag = rat_abs_str(c);
        if (k == 0) {
            os << mag;
            continue;
        }
        std::string var;
        if (k % 2 == 0) {
            std::int64_t n = k / 2;
            var = (n == 1) ? "q" : "q^" + std::to_string(n);
        } else {
            var = "q^(" + std::to_string(k) + "/2)";
        }
        if (mag == "1")
            os << var;
        else
            os << mag << "*" << var;
    }
    return os.str();
}

std::string render_negq_factored(const HalfLaurentSeries& s) {
    if (s.is_zero_on_window()) return "0";
    auto low = *s.lowest_term();
    if (low % 2 != 0) return render_q(s); // half-integer lead: no (-q)-factored form
    std::int64_t v = low / 2;
    std::ostringstream os;
    if (v != 0) os << "(-q)^" << v << " * (";
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        if (k % 2 != 0) return render_q(s);
        std::int64_t n = k / 2 - v;
        Rat cc = (k / 2) % 2 == 0 ? c : -c; // coefficient of (-q)^(k/2)
        bool neg = cc < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mag = rat_abs_str(cc);
        if (n == 0) {
            os << mag;
        } else {
            std::string var = (n == 1) ? "(-q)" : "(-q)^" + std::to_string(n);
            if (mag == "1")
                os << var;
            else
                os << mag << var;
        }
    }
    if (v != 0) os << ")";
    return os.str();
}

} // namespace vertexlab
