#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vertexlab/errors.hpp"

namespace vertexlab {

/// Vector in F_p^k, k <= 3. Entries reduced mod p.
struct FqVec {
    std::array<int, 3> c{0, 0, 0};
    int dim = 0;
};

/// Subspace of F_p^k as a row-reduced echelon basis (canonical form).
struct FqSubspace {
    int p = 2;
    int dim_ambient = 0;
    std::vector<FqVec> rows; // echelon, leading entries 1, strictly increasing pivots

    int dim() const { return static_cast<int>(rows.size()); }
    bool contains(const FqVec& v) const;
    bool contains_space(const FqSubspace& other) const;
    /// Echelon-inserts v; returns true if the dimension grew.
    bool insert(const FqVec& v);

    friend bool operator==(const FqSubspace& a, const FqSubspace& b);
    friend bool operator<(const FqSubspace& a, const FqSubspace& b);
};

FqSubspace fq_zero_space(int p, int k);
FqSubspace fq_full_space(int p, int k);
FqSubspace fq_span(int p, int k, const std::vector<FqVec>& gens);
FqSubspace fq_sum(const FqSubspace& a, const FqSubspace& b);

/// All subspaces of F_p^k, canonical and deterministically ordered.
/// k <= 3: dimensions 0 and k are unique, lines and hyperplanes are
/// enumerated directly.
const std::vector<FqSubspace>& fq_all_subspaces(int p, int k);

} // namespace vertexlab
