#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vertexlab/errors.hpp"

namespace vertexlab {

using Box = std::array<std::int64_t, 3>;

/// 2D partition in English notation, 0-indexed cells: (a,b) is a cell iff
/// a < rows.size() and b < rows[a].
class Partition2D {
public:
    Partition2D() = default;
    explicit Partition2D(std::vector<std::int64_t> rows);

    /// Comma-separated row lengths; empty string is the empty partition.
    static Partition2D parse(const std::string& text);

    const std::vector<std::int64_t>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    std::int64_t size() const;
    /// Max of row count and first row: a box bound for the cell set.
    std::int64_t extent() const;
    bool contains(std::int64_t a, std::int64_t b) const {
        return a >= 0 && b >= 0 && a < static_cast<std::int64_t>(rows_.size()) && b < rows_[static_cast<std::size_t>(a)];
    }
    Partition2D transpose() const;
    std::string to_string() const;

    friend bool operator==(const Partition2D&, const Partition2D&) = default;

private:
    std::vector<std::int64_t> rows_;
};

/// Ordered triple of outgoing partitions. Leg i constrains the coordinate
/// pair (w_j, w_k), j < k, j,k != i, read in increasing index order:
///   leg 1 <-> (w2,w3), leg 2 <-> (w1,w3), leg 3 <-> (w1,w2).
struct LegTriple {
    std::array<Partition2D, 3> legs;

    /// Semicolon-separated legs, each a comma-separated row list ("1;;2,1").
    static LegTriple parse(const std::string& text);

    const Partition2D& operator[](std::size_t i) const { return legs[i]; }
    bool all_empty() const { return legs[0].empty() && legs[1].empty() && legs[2].empty(); }
    std::int64_t total_size() const { return legs[0].size() + legs[1].size() + legs[2].size(); }
    std::int64_t extent() const;
    std::string to_string() const;

    /// Coordinate-rotation image with identical box counts and volumes:
    /// (m1,m2,m3) -> (m2^T, m3^T, m1) under w -> (w2,w3,w1).
    LegTriple rotated() const;

    friend bool operator==(const LegTriple&, const LegTriple&) = default;
};

/// True iff w lies in the cylinder of leg i (1-based), i.e. the cross-section
/// cell of w transverse to axis i is a cell of that leg. The coordinate along
/// the leg axis is unrestricted (may be negative).
bool in_cylinder(const LegTriple& legs, int i, const Box& w);

/// Number of cylinders containing w.
int cylinder_count(const LegTriple& legs, const Box& w);

/// Membership in the minimal monomial configuration: w >= 0 and k(w) >= 1.
bool minimal_membership(const LegTriple& legs, const Box& w);

/// Box count of the minimal configuration in [0..N]^3 minus (N+1)*(total leg
/// size) — independent of N once N is large enough.
std::int64_t renormalized_volume_at(const LegTriple& legs, std::int64_t n);

/// Renormalized volume at the standard cut-off, recomputed at the next
/// cut-off with equality enforced (instability signals a convention bug).
std::int64_t renormalized_volume(const LegTriple& legs);

} // namespace vertexlab
