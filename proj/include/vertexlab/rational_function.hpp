#pragma once

#include <string>
#include <vector>

#include "vertexlab/qseries.hpp"

namespace vertexlab {

using Poly = std::vector<Rat>; // coefficient of q^i at index i

namespace polydetail {
Poly trim(Poly p);
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rat& c);
/// Remainder of a by monic-normalized b (euclidean division over Q).
Poly rem(Poly a, const Poly& b);
Poly gcd_monic(Poly a, Poly b);
bool is_zero(const Poly& p);
int deg(const Poly& p); // -1 for zero
} // namespace polydetail

/// Quotient of polynomials over Q in the single variable q, kept gcd-reduced
/// with monic denominator (the canonical representative).
class RationalFunction {
public:
    RationalFunction(Poly num, Poly den);

    static RationalFunction from_strings(const std::vector<std::string>& num,
                                         const std::vector<std::string>& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return polydetail::is_zero(num_); }

    /// Laurent expansion about q = 0 up to q-order hi_int (inclusive).
    HalfLaurentSeries expand(std::int64_t hi_int) const;

    /// Exact decision of R(q) == R(1/q) by cross-multiplying the q-cleared
    /// numerators; a finite polynomial identity test, not a series test.
    bool symmetric_under_q_inverse() const;

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;
};

} // namespace vertexlab
