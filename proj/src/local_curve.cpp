#include "vertexlab/local_curve.hpp"

#include <algorithm>

namespace vertexlab {

HalfLaurentSeries pairs_contribution(const CurveData& c, std::int64_t hi_int) {
    if (c.g < 0) throw ValidationError("curve genus must be non-negative");
    long e = 2 * c.g - 2 + c.l;
    std::int64_t shift = 1 - c.g;
    if (hi_int < shift && e < 0)
        throw ValidationError("pairs_contribution: window ends below the leading term");
    HalfLaurentSeries base = one_plus_q_pow(e, std::max<std::int64_t>(0, hi_int - shift));
    return shift_keys(base, q_key(shift));
}

UPowerSeries sin_half_ratio(std::int64_t order) {
    if (order < 0) throw ValidationError("negative expansion order");
    UPowerSeries s(0, order);
    Rat term(1); // (-1)^k / (4^k (2k+1)!)
    for (std::int64_t k = 0; 2 * k <= order; ++k) {
        if (k > 0) {
            long two_k = static_cast<long>(2 * k);
            term = -term / Rat(4L * two_k * (two_k + 1));
        }
        s.set(2 * k, GaussianRat(term));
    }
    return s;
}

UPowerSeries exp_iu_half(long k, std::int64_t order) {
    if (order < 0) throw ValidationError("negative expansion order");
    UPowerSeries s(0, order);
    GaussianRat term(1);
    GaussianRat step = GaussianRat(Rat(0), make_rat(k, 2)); // i k/2
    for (std::int64_t n = 0; n <= order; ++n) {
        if (n > 0) term = term * step / GaussianRat(static_cast<long>(n));
        s.set(n, term);
    }
    return s;
}

UPowerSeries gw_contribution(const CurveData& c, std::int64_t order) {
    if (c.g < 0) throw ValidationError("curve genus must be non-negative");
    long m = 2 * c.g - 2 + c.l;
    std::int64_t shift = 2 * c.g - 2;
    std::int64_t pad = order + 2 * std::abs(static_cast<std::int64_t>(m)) + 4;
    UPowerSeries ratio = sin_half_ratio(pad);
    UPowerSeries powed = pow_int(ratio, m);
    UPowerSeries shifted = shift_keys(powed, shift);
    if (shifted.hi() > order) shifted = truncated_to(shifted, order);
    return shifted;
}

CorrespondenceReport correspondence_check(const CurveData& c, std::int64_t order) {
    long m = 2 * c.g - 2 + c.l;
    std::int64_t pad = order + 2 * std::abs(static_cast<std::int64_t>(m)) +
                       std::abs(2L * c.g - 2) + std::abs(c.l) + 6;

    // pairs side after q = -e^(iu):
    //   (-q)^(-l/2) q^(1-g) (1+q)^(2g-2+l)
    //   = (-1)^(1-g) e^(iu(2-2g-l)/2) (1 - e^(iu))^m
    UPowerSeries one_minus_e = UPowerSeries::constant(GaussianRat(1)) - exp_iu_half(2, pad);
    // 1 - e^(iu) starts at u^1; record the known-zero constant term in the window
    UPowerSeries tight(1, one_minus_e.hi());
    for (const auto& [k, v] : one_minus_e.terms()) tight.set(k, v);
    UPowerSeries lhs = exp_iu_half(2 - 2 * c.g - c.l, pad) * pow_int(tight, m);
    if (((c.g + 1) % 2) != 0) lhs = scale(lhs, GaussianRat(-1)); // (-1)^(1-g)

    // GW side: (-iu)^l (sin(u/2)/(u/2))^m u^(2g-2) = (-i)^l u^(l+2g-2) S^m
    UPowerSeries rhs = shift_keys(pow_int(sin_half_ratio(pad), m),
                                  static_cast<std::int64_t>(c.l) + 2 * c.g - 2);
    rhs = scale(rhs, gaussian_pow(GaussianRat(Rat(0), Rat(-1)), c.l));

    CorrespondenceReport report;
    report.order = order;
    std::int64_t lo = std::min(lhs.lo(), rhs.lo());
    std::int64_t hi = std::min(lhs.hi(), rhs.hi());
    if (hi < order)
        throw InsufficientWindowError("correspondence expansion fell short of requested order");
    hi = order;
    report.equal = true;
    for (std::int64_t n = lo; n <= hi; ++n) {
        GaussianRat a = n < lhs.lo() ? GaussianRat(0) : lhs.coeff(n);
        GaussianRat b = n < rhs.lo() ? GaussianRat(0) : rhs.coeff(n);
        if (!(a == b)) {
            report.equal = false;
            report.diffs.push_back({n, a, b});
        }
    }
    return report;
}

Int sym_euler(long g, std::int64_t d) {
    if (g < 0) throw ValidationError("genus must be non-negative");
    if (d < 0) throw ValidationError("negative symmetric power");
    Int b = binomial_general(Int(2 * g - 2), static_cast<std::uint64_t>(d));
    return (d % 2 == 0) ? b : -b;
}

Rat taut_chern_integral(long g, long l, std::int64_t d) {
    if (d < 0) throw ValidationError("negative Chern degree");
    return Rat(binomial_general(Int(2 * g - 2 + l), static_cast<std::uint64_t>(d)));
}

} // namespace vertexlab
