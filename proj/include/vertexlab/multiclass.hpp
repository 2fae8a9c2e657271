#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "vertexlab/qseries.hpp"

namespace vertexlab {

/// Effective curve class in a free lattice: componentwise non-negative,
/// not all zero for the graded pieces we store.
using ClassVector = std::vector<std::int64_t>;

bool class_is_effective(const ClassVector& v);
std::int64_t class_degree(const ClassVector& v, const std::vector<std::int64_t>& weights);
/// gcd of the components (0 for the zero class).
std::int64_t class_divisibility(const ClassVector& v);
ClassVector class_divide(const ClassVector& v, std::int64_t r);
ClassVector class_add(const ClassVector& a, const ClassVector& b);
ClassVector class_scale(const ClassVector& a, std::int64_t k);

/// Finite collection of q-series graded by curve class, truncated at a
/// degree cutoff; the class-0 part is a plain scalar. Degree weights are any
/// positive integers (all-ones by default).
struct MultiClassSeries {
    std::vector<std::int64_t> weights;
    std::int64_t cutoff = 0;
    Rat constant{0};
    std::map<ClassVector, HalfLaurentSeries> terms;

    MultiClassSeries() = default;
    MultiClassSeries(std::vector<std::int64_t> w, std::int64_t cut, Rat c0 = Rat(0))
        : weights(std::move(w)), cutoff(cut), constant(std::move(c0)) {
        for (auto x : weights)
            if (x <= 0) throw ValidationError("degree weights must be positive");
    }

    std::size_t rank() const { return weights.size(); }
    std::int64_t degree(const ClassVector& v) const { return class_degree(v, weights); }

    /// Insert or accumulate a graded piece; validates effectivity and cutoff.
    void add_term(const ClassVector& cls, const HalfLaurentSeries& s);

    /// Stored series for a class; classes never touched are exact zero.
    HalfLaurentSeries term_or_zero(const ClassVector& cls) const;
};

MultiClassSeries mc_add(const MultiClassSeries& a, const MultiClassSeries& b);
MultiClassSeries mc_scale(const MultiClassSeries& a, const Rat& c);
MultiClassSeries mc_mul(const MultiClassSeries& a, const MultiClassSeries& b);

/// exp of a connected series (class-0 part must be 0), graded by degree:
/// only finitely many powers contribute below the cutoff.
MultiClassSeries graded_exp(const MultiClassSeries& f);

/// log of a partition-function-like series (class-0 part must be 1).
MultiClassSeries graded_log(const MultiClassSeries& z);

/// Classwise equal_on_common over the union of stored classes (a class
/// missing on one side is its exact zero).
bool mc_equal_on_common(const MultiClassSeries& a, const MultiClassSeries& b);

} // namespace vertexlab
