#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "vertexlab/errors.hpp"

namespace vertexlab {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). GMP keeps the canonical form under arithmetic; only raw
/// construction needs an explicit canonicalize, which the helpers below do.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_int(const Int& n) { return Rat(n); }

/// Parses "num", "-num" or "num/den". Throws on malformed input.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw ValidationError("malformed rational literal: '" + s + "'");
    if (r.get_den() == 0) throw ValidationError("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

/// Canonical form: "num" when the denominator is 1, else "num/den".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw ValidationError("0 raised to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Generalized binomial coefficient: top·(top-1)···(top-k+1)/k!, an exact
/// integer for any integer top (possibly negative) and k ≥ 0.
inline Int binomial_general(const Int& top, std::uint64_t k) {
    Int num(1), den(1);
    Int t = top;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= t - static_cast<long>(i);
        den *= static_cast<long>(i + 1);
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw ConsistencyError("generalized binomial did not divide exactly");
    return q;
}

} // namespace vertexlab
