#pragma once

#include <cstdint>
#include <vector>

#include "vertexlab/qseries.hpp"
#include "vertexlab/series.hpp"

namespace vertexlab {

/// Nonsingular embedded curve datum: genus and anticanonical degree.
struct CurveData {
    long g = 0; // genus, >= 0
    long l = 0; // degree of the anticanonical restriction, any sign
};

/// q^(1-g) (1+q)^(2g-2+l), expanded through q-order hi_int when the exponent
/// is negative (exact Laurent polynomial otherwise).
HalfLaurentSeries pairs_contribution(const CurveData& c, std::int64_t hi_int);

/// (sin(u/2)/(u/2))^(2g-2+l) u^(2g-2) through u-order `order`.
UPowerSeries gw_contribution(const CurveData& c, std::int64_t order);

/// sin(u/2)/(u/2) as an even rational series through u-order `order`.
UPowerSeries sin_half_ratio(std::int64_t order);

/// exp(i u k/2) through u-order `order` (k may be negative).
UPowerSeries exp_iu_half(long k, std::int64_t order);

/// Coefficient of q^d in (1-q)^(2g-2): the Euler number of the d-th symmetric
/// product of a genus-g curve.
Int sym_euler(long g, std::int64_t d);

/// Generalized binomial binom(2g-2+l, d) — the tautological top Chern number
/// matching the q^(1-g+d) coefficient of pairs_contribution.
Rat taut_chern_integral(long g, long l, std::int64_t d);

/// Both sides of the variable change -q = e^(iu) with the half-power twist
/// (-q)^(-l/2) on the q-side and (-iu)^l on the u-side, compared termwise.
struct CorrespondenceRow {
    std::int64_t order;
    GaussianRat pairs_side;
    GaussianRat gw_side;
};

struct CorrespondenceReport {
    bool equal = false;
    std::int64_t order = 0;
    std::vector<CorrespondenceRow> diffs;
};

CorrespondenceReport correspondence_check(const CurveData& c, std::int64_t order);

} // namespace vertexlab
