#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "vertexlab/dt_vertex.hpp"
#include "vertexlab/fq.hpp"
#include "vertexlab/partitions.hpp"
#include "vertexlab/qseries.hpp"

namespace vertexlab {

/// One torus weight of the three-legged module: which legs carry a basis
/// vector here, whether the canonical section passes through, and how many
/// dimensions survive in the quotient.
struct WeightNode {
    Box w{};
    std::array<bool, 3> leg_present{false, false, false};
    int k = 0;      // ambient dimension
    bool has_O = false;
    int d = 0;      // quotient dimension = k - (has_O ? 1 : 0)
    std::int64_t coord_sum = 0;
};

/// Where multiplication by a coordinate sends a node.
enum class EdgeKind { InRegion, ForcedLine, ForcedZero };

struct Edge {
    EdgeKind kind = EdgeKind::ForcedZero;
    int target = -1;                   // node index for InRegion
    int target_k = 0;                  // ambient dimension at the target weight
    std::array<int, 3> pos_map{-1, -1, -1}; // source basis slot -> target slot, -1 kills
};

/// Finite support of all length <= budget submodule configurations: every
/// weight with quotient dimension >= 1 that a submodule of that length can
/// touch. Positive overlap weights are included in full; each leg ray is cut
/// at depth = budget (a deeper nonzero weight would force a longer chain).
struct SupportRegion {
    LegTriple legs;
    std::int64_t budget = 0;
    std::vector<WeightNode> nodes;                 // sorted by (coord_sum, lex)
    std::vector<std::array<Edge, 3>> out_edges;    // per node, per coordinate
    std::vector<std::vector<std::pair<int, int>>> preds; // per node: (pred idx, coord j)

    int d2_node_count() const;
};

SupportRegion build_region(const LegTriple& legs, std::int64_t budget);

/// Exact number of closure-satisfying subspace assignments over F_p of total
/// quotient dimension exactly l.
std::uint64_t count_submodules_fq(const SupportRegion& region, std::int64_t l, int p);

/// One pass of the above for every length 0..lmax.
std::vector<std::uint64_t> count_all_lengths_fq(const SupportRegion& region, std::int64_t lmax,
                                                int p);

/// Per-length point counts over several primes, the interpolated count
/// polynomial, its expansion in the (t+1)-power basis, and the topological
/// Euler characteristic P(1).
struct PtLengthData {
    std::vector<std::pair<int, std::uint64_t>> prime_counts;
    std::vector<Rat> poly;        // coefficients of P(t), degree <= d2 nodes
    std::vector<Int> comp_basis;  // coefficients in basis (t+1)^f, all >= 0
    Int euler{0};
};

struct PtEulerVector {
    LegTriple legs;
    std::int64_t lmax = 0;
    std::vector<PtLengthData> lengths; // index = length
    std::vector<Int> euler() const;
};

PtEulerVector pt_euler_counts(const LegTriple& legs, std::int64_t lmax,
                              const SearchLimits& limits = {});

/// (-q)^volume * sum_l e_l (-q)^l.
HalfLaurentSeries pt_vertex(const LegTriple& legs, std::int64_t lmax,
                            const SearchLimits& limits = {});

/// Coefficientwise comparison of the normalized box-counting series against
/// the submodule series on the common window.
struct VertexCompareRow {
    std::int64_t order; // exponent of (-q) relative to the common prefactor
    Rat dt;
    Rat pt;
};

struct VertexCompareReport {
    bool equal = false;
    std::int64_t order = 0;
    std::int64_t volume = 0;
    std::vector<VertexCompareRow> rows;     // all compared orders
    std::vector<std::int64_t> diff_orders;  // orders where the sides differ
};

VertexCompareReport vertex_compare(const LegTriple& legs, std::int64_t order,
                                   const SearchLimits& limits = {});

} // namespace vertexlab
