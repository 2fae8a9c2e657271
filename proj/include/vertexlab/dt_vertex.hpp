#pragma once

#include <cstdint>
#include <vector>

#include "vertexlab/partitions.hpp"
#include "vertexlab/qseries.hpp"

namespace vertexlab {

struct SearchLimits {
    std::int64_t max_len = 10;
    std::uint64_t max_states = 200'000'000;
};

/// counts[l] = number of box configurations with the given legs obtained by
/// adding exactly l boxes to the minimal configuration (counts[0] == 1, the
/// unique Cohen-Macaulay element).
using DtCountVector = std::vector<std::uint64_t>;

/// Enumerates downward-closed box sets over the minimal configuration by
/// depth-first addition of addable corners in strictly increasing
/// lexicographic order — each configuration is generated exactly once.
DtCountVector dt_counts(const LegTriple& legs, std::int64_t lmax,
                        const SearchLimits& limits = {});

/// Expansion of prod_{n>=1} (1 - (-q)^n)^(-n) to q-order hi_int.
HalfLaurentSeries macmahon(std::int64_t hi_int);

/// (-q)^volume * sum_l counts[l] (-q)^l.
HalfLaurentSeries dt_series(const LegTriple& legs, std::int64_t lmax,
                            const SearchLimits& limits = {});

/// dt_series divided by the empty-legs series on the common window.
HalfLaurentSeries dt_vertex_normalized(const LegTriple& legs, std::int64_t lmax,
                                       const SearchLimits& limits = {});

} // namespace vertexlab
