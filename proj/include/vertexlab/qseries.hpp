#pragma once

#include <string>
#include <vector>

#include "vertexlab/series.hpp"

namespace vertexlab {

// --- q-flavoured helpers on HalfLaurentSeries -------------------------------
//
// Exponent keys are doubled: key k stores the coefficient of q^(k/2).
// "Q" denotes -q throughout; a term c*Q^n equals c*(-1)^n q^n.

using QKey = HalfLaurentSeries::Key;

inline QKey q_key(std::int64_t n) { return 2 * n; }

/// Integer part of the top/bottom of a window in q-exponent units.
inline std::int64_t hi_int(const HalfLaurentSeries& s) {
    if (s.exact()) return std::numeric_limits<std::int64_t>::max() / 8;
    // floor division for negatives
    QKey h = s.hi();
    return h >= 0 ? h / 2 : -((-h + 1) / 2);
}
inline std::int64_t lo_int(const HalfLaurentSeries& s) {
    QKey l = s.lo();
    return l >= 0 ? (l + 1) / 2 : -((-l) / 2);
}

inline const Rat& coeff_q(const HalfLaurentSeries& s, std::int64_t n) {
    return s.coeff(q_key(n));
}
inline Rat coeff_Q(const HalfLaurentSeries& s, std::int64_t n) {
    Rat c = s.coeff(q_key(n));
    return (n % 2 == 0) ? c : -c;
}

inline HalfLaurentSeries q_monomial(std::int64_t n, Rat c = Rat(1)) {
    return HalfLaurentSeries::monomial(q_key(n), std::move(c));
}
inline HalfLaurentSeries Q_monomial(std::int64_t n, Rat c = Rat(1)) {
    if (n % 2 != 0) c = -c;
    return HalfLaurentSeries::monomial(q_key(n), std::move(c));
}

/// Exact polynomial sum_i coeffs[i] q^(lo+i).
inline HalfLaurentSeries from_q_poly(const std::vector<Rat>& coeffs, std::int64_t lo = 0) {
    HalfLaurentSeries s(std::min<QKey>(q_key(lo), 0), HalfLaurentSeries::kInf);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s.set(q_key(lo + static_cast<std::int64_t>(i)), coeffs[i]);
    return s;
}

inline HalfLaurentSeries q_one() { return HalfLaurentSeries::constant(Rat(1)); }

/// (1+q)^e. Exact for e >= 0; expanded to q-order hi_req for e < 0.
HalfLaurentSeries one_plus_q_pow(long e, std::int64_t hi_req_int = 0);

/// Formal substitution sending -q to (-q)^r, i.e. q -> (-1)^(r+1) q^r.
/// A term c q^(k/2) maps to c ((-1)^(r+1))^(k/2) q^(rk/2); for even r the
/// key must be even (half-integer exponents would leave the field).
HalfLaurentSeries subst_neg_power(const HalfLaurentSeries& s, long r);

// --- rendering ---------------------------------------------------------------

/// "1 - q + 3*q^2 - 6*q^3" style; half exponents render as q^(k/2).
std::string render_q(const HalfLaurentSeries& s);

/// Factored vertex style: "(-q)^v * (1 + 2(-q) + 4(-q)^2)" where v is the
/// lowest occupied exponent (omitted when v = 0).
std::string render_negq_factored(const HalfLaurentSeries& s);

} // namespace vertexlab
