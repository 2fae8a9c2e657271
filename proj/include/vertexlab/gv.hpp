#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vertexlab/multiclass.hpp"
#include "vertexlab/qseries.hpp"

namespace vertexlab {

/// Table of BPS-style invariants n_{g,beta} over a free class lattice.
struct GVTable {
    std::vector<std::int64_t> weights;
    std::int64_t cutoff = 0;
    std::map<std::pair<long, ClassVector>, Rat> entries;
    /// Lowest genus certified solved per class (solves below it would need a
    /// wider coefficient window).
    std::map<ClassVector, long> genus_floor;

    GVTable() = default;
    GVTable(std::vector<std::int64_t> w, std::int64_t cut)
        : weights(std::move(w)), cutoff(cut) {}

    void set(long g, const ClassVector& cls, Rat n) {
        if (n == 0)
            entries.erase({g, cls});
        else
            entries[{g, cls}] = std::move(n);
    }
    Rat get(long g, const ClassVector& cls) const {
        auto it = entries.find({g, cls});
        return it == entries.end() ? Rat(0) : it->second;
    }
    bool integral() const {
        for (const auto& [key, n] : entries)
            if (!rat_is_integer(n)) return false;
        return true;
    }
    friend bool operator==(const GVTable& a, const GVTable& b) {
        return a.weights == b.weights && a.cutoff == b.cutoff && a.entries == b.entries;
    }
};

/// Coefficients of Phi(Q)^gm1 as a map l -> phi_l, Q-exponent l. Finite for
/// gm1 >= 0; expanded through l <= l_hi for gm1 < 0. All values are integers;
/// the leading one (l = -gm1) is 1.
std::map<std::int64_t, Rat> phi_Q_coeffs(long gm1, std::int64_t l_hi);

/// Phi((-q)^r)^gm1 as a q-series: exact Laurent polynomial for gm1 >= 0,
/// truncated expansion through q-order hi_int for gm1 < 0.
HalfLaurentSeries phi_power(long gm1, long r,
                            std::optional<std::int64_t> hi_int = std::nullopt);

/// Unique expansion of a Laurent series over the basis Phi(-q)^(g-1):
/// poles fix the g > 1 coefficients from the top down, vanishing orders fix
/// g <= 1 upwards. The residual vanishes identically on the certified window.
struct PhiDecomposition {
    std::map<long, Rat> coeffs; // g -> l_g
    std::int64_t window_lo_int = 0;
    std::int64_t window_hi_int = 0;
};

PhiDecomposition v0_decompose(const HalfLaurentSeries& series);

/// Rebuild sum_g l_g Phi(-q)^(g-1) on the given q-window.
HalfLaurentSeries phi_recombine(const std::map<long, Rat>& coeffs, std::int64_t hi_int);

/// Solve the multiple-cover system for a connected series: by increasing
/// degree, subtract the r > 1 cover terms of already-solved classes, then
/// decompose what remains. Requires per-class windows reaching q-order
/// div(beta).
GVTable extract_gv(const MultiClassSeries& connected);

/// Connected series of a table:
///   F = sum n_{g,gamma} (-1)^(g-1)/k Phi((-q)^k)^(g-1) v^(k gamma),
/// every class window certified at least through q-order hi_int.
MultiClassSeries gv_connected(const GVTable& table, std::int64_t hi_int, std::int64_t cutoff);

/// Partition function exp of the connected series, class windows truncated
/// to q-order hi_int.
MultiClassSeries gv_generate(const GVTable& table, std::int64_t hi_int, std::int64_t cutoff);

/// The same partition function assembled as the product
///   prod (1 - Q^l v^gamma)^(-ntilde phi^{g-1}_l)
/// — defined for integral tables (falls back to gv_generate otherwise).
MultiClassSeries product_form(const GVTable& table, std::int64_t hi_int, std::int64_t cutoff);

struct IntegralityViolation {
    ClassVector cls;
    std::int64_t index; // q-order for series entries, genus for table entries
    Rat value;
};

struct IntegralityReport {
    std::vector<IntegralityViolation> series_violations;
    std::vector<IntegralityViolation> table_violations;
    bool ok() const { return series_violations.empty() && table_violations.empty(); }
};

/// Integer table -> the generated partition-function coefficients must all be
/// integers; reports any that are not.
IntegralityReport integrality_check_table(const GVTable& table, std::int64_t hi_int);

/// Integer partition-function data -> the extracted table must be integral;
/// reports both non-integer inputs and non-integer extracted entries.
IntegralityReport integrality_check_series(const MultiClassSeries& z);

/// All (g, beta) with g < 0 and a nonzero entry.
std::vector<std::pair<long, ClassVector>> vanishing_check(const GVTable& table);

/// Decomposition attempt over {Phi((-q)^r)^(g-1) : g >= 0, r <= d}.
struct VdMembership {
    bool member = false;
    std::map<long, Rat> v0_coeffs;    // l_g for g >= 1
    std::map<long, Rat> cover_coeffs; // r -> coefficient of Phi((-q)^r)^(-1)
    std::optional<std::int64_t> failure_order;
};

VdMembership vd_membership(const HalfLaurentSeries& series, long d);

/// Low-order slice of a partition function: class -> {n -> coefficient},
/// keeping q-orders n <= n_max only.
using TruncationData = std::map<ClassVector, std::map<std::int64_t, Rat>>;

TruncationData truncate_low_orders(const MultiClassSeries& z, std::int64_t n_max = 1);

/// Rebuild the full partition function from its n <= 1 coefficients,
/// assuming the table it came from vanishes in negative genus. The
/// reconstructed function is re-checked against every input coefficient.
struct Reconstruction {
    GVTable table;
    MultiClassSeries z;
};

Reconstruction reconstruct_from_truncation(const TruncationData& data,
                                           const std::vector<std::int64_t>& weights,
                                           std::int64_t cutoff, std::int64_t hi_int);

/// One-class extraction with a positive-degree twist: divide by (1+q)^c,
/// then decompose; n_g = (-1)^(g-1) l_g.
std::map<long, Rat> fano_extract(const HalfLaurentSeries& series, long c);

} // namespace vertexlab
