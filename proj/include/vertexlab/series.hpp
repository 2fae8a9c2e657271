#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "vertexlab/errors.hpp"
#include "vertexlab/gaussian.hpp"
#include "vertexlab/rational.hpp"

namespace vertexlab {

inline bool is_zero_coeff(const Rat& c) { return c == 0; }
inline bool is_zero_coeff(const GaussianRat& c) { return c.is_zero(); }

/// Truncated Laurent series with explicit window bookkeeping.
///
/// A series is exactly zero below `lo()`, has known coefficients on
/// [lo(), hi()], and is unknown above hi(). hi() == kInf marks an exact
/// series (a Laurent polynomial, or data exact to every order). Every
/// operation computes the largest window on which its result is
/// authoritative; reading a coefficient beyond the window throws instead of
/// returning a silent zero.
///
/// Keys are plain integers; what an exponent key *means* (doubled q-exponent,
/// u-exponent, ...) is fixed by the instantiation's helpers, not here.
template <class C>
class Series {
public:
    using Key = std::int64_t;
    static constexpr Key kInf = std::numeric_limits<Key>::max() / 4;

    /// Exact zero.
    Series() : lo_(0), hi_(kInf) {}

    Series(Key lo, Key hi) : lo_(lo), hi_(hi) { check_window(lo, hi); }

    static Series zero(Key lo, Key hi) { return Series(lo, hi); }

    static Series constant(C c) {
        Series s(0, kInf);
        s.set(0, std::move(c));
        return s;
    }

    static Series monomial(Key k, C c) {
        Series s(std::min<Key>(k, 0), kInf);
        s.set(k, std::move(c));
        return s;
    }

    Key lo() const { return lo_; }
    Key hi() const { return hi_; }
    bool exact() const { return hi_ == kInf; }
    const std::map<Key, C>& terms() const { return coeffs_; }

    bool is_zero_on_window() const { return coeffs_.empty(); }

    /// Lowest key with a nonzero coefficient, if any.
    std::optional<Key> lowest_term() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.begin()->first;
    }
    std::optional<Key> highest_term() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.rbegin()->first;
    }

    /// Coefficient at key k: exact zero below the window, stored value inside,
    /// and an error above — the value there was never computed.
    const C& coeff(Key k) const {
        static const C kZero{};
        if (k > hi_)
            throw InsufficientWindowError(
                "coefficient at exponent key " + std::to_string(k) +
                " requested beyond window hi=" + std::to_string(hi_));
        if (k < lo_) return kZero;
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? kZero : it->second;
    }

    /// Builder-style coefficient write. Extends lo_ downward if needed; keys
    /// above the window are rejected.
    void set(Key k, C c) {
        if (k > hi_)
            throw ValidationError("series term beyond window hi");
        if (k < lo_) lo_ = k;
        if (is_zero_coeff(c))
            coeffs_.erase(k);
        else
            coeffs_[k] = std::move(c);
    }

    void add_to(Key k, const C& c) {
        if (is_zero_coeff(c)) return;
        if (k > hi_) throw ValidationError("series term beyond window hi");
        if (k < lo_) lo_ = k;
        auto [it, fresh] = coeffs_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (is_zero_coeff(it->second)) coeffs_.erase(it);
        }
    }

    friend bool identical(const Series& a, const Series& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.coeffs_ == b.coeffs_;
    }

private:
    static void check_window(Key lo, Key hi) {
        if (lo > hi) throw ValidationError("degenerate series window (lo > hi)");
    }

    std::map<Key, C> coeffs_;
    Key lo_;
    Key hi_;
};

namespace detail {
template <class K>
K sat_add(K a, K b) {
    constexpr K inf = Series<Rat>::kInf;
    if (a >= inf || b >= inf) return inf;
    return a + b;
}
} // namespace detail

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    using Key = typename Series<C>::Key;
    Key lo = std::min(a.lo(), b.lo());
    Key hi = std::min(a.hi(), b.hi());
    Series<C> r(lo, hi);
    for (const auto& [k, c] : a.terms())
        if (k <= hi) r.add_to(k, c);
    for (const auto& [k, c] : b.terms())
        if (k <= hi) r.add_to(k, c);
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a) {
    Series<C> r(a.lo(), a.hi());
    for (const auto& [k, c] : a.terms()) r.set(k, -c);
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    return a + (-b);
}

/// Truncated product. The result window follows the propagation rule
///   hi = min(hi_a + lo_b, lo_a + hi_b):
/// terms of the unknown tail of one factor times the lowest admissible term
/// of the other first pollute that exponent.
template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    using Key = typename Series<C>::Key;
    Key lo = a.lo() + b.lo();
    Key hi = std::min(detail::sat_add(a.hi(), b.lo()), detail::sat_add(a.lo(), b.hi()));
    Series<C> r(lo, hi);
    for (const auto& [ka, ca] : a.terms()) {
        if (ka > hi - b.lo()) continue;
        for (const auto& [kb, cb] : b.terms()) {
            Key k = ka + kb;
            if (k > hi) break;
            r.add_to(k, ca * cb);
        }
    }
    return r;
}

template <class C>
Series<C> scale(const Series<C>& a, const C& c) {
    Series<C> r(a.lo(), a.hi());
    if (is_zero_coeff(c)) return r;
    for (const auto& [k, v] : a.terms()) r.set(k, v * c);
    return r;
}

/// Multiply by the exact monomial with exponent key dk.
template <class C>
Series<C> shift_keys(const Series<C>& a, typename Series<C>::Key dk) {
    Series<C> r(a.lo() + dk, detail::sat_add(a.hi(), dk));
    for (const auto& [k, c] : a.terms()) r.set(k + dk, c);
    return r;
}

/// Restrict the authoritative window from above (never widen: coefficients
/// beyond the recorded window were not computed).
template <class C>
Series<C> truncated_to(const Series<C>& a, typename Series<C>::Key new_hi) {
    if (new_hi >= a.hi()) return a;
    if (new_hi < a.lo()) throw ValidationError("truncation below window lo");
    Series<C> r(a.lo(), new_hi);
    for (const auto& [k, c] : a.terms()) {
        if (k > new_hi) break;
        r.set(k, c);
    }
    return r;
}

/// Multiplicative inverse. Requires a nonzero coefficient at the window
/// bottom. For a finite window the result is authoritative on
/// [-lo, hi - 2*lo]; exact inputs must say how far to expand.
template <class C>
Series<C> inverse(const Series<C>& a,
                  std::optional<typename Series<C>::Key> hi_request = std::nullopt) {
    using Key = typename Series<C>::Key;
    const C& lead = [&]() -> const C& {
        if (a.is_zero_on_window() || a.lowest_term() != a.lo())
            throw ValidationError("series inverse: zero coefficient at window lo");
        return a.coeff(a.lo());
    }();

    Key certifiable = a.exact() ? Series<C>::kInf : a.hi() - 2 * a.lo();
    Key hi;
    if (hi_request) {
        if (*hi_request > certifiable)
            throw InsufficientWindowError("series inverse: requested window exceeds what the operand certifies");
        hi = *hi_request;
    } else {
        if (a.exact())
            throw ValidationError("series inverse of an exact series needs an explicit expansion order");
        hi = certifiable;
    }

    Key lo = -a.lo();
    Series<C> r(lo, hi);
    // Triangular solve: (a * r)[a.lo + n] must be [n == 0].
    C inv_lead = C(1) / lead;
    r.set(lo, inv_lead);
    for (Key n = 1; n + lo <= hi; ++n) {
        // conv = sum_{m<n} a[a.lo + (n-m)] * r[lo + m]
        C conv{};
        for (const auto& [k, c] : a.terms()) {
            Key d = k - a.lo();
            if (d == 0) continue;
            if (d > n) break;
            const C& rc = r.coeff(lo + (n - d));
            if (!is_zero_coeff(rc)) conv += c * rc;
        }
        if (!is_zero_coeff(conv)) r.set(lo + n, -(conv * inv_lead));
    }
    return r;
}

/// Integer power; negative exponents go through inverse() and inherit its
/// window requirements.
template <class C>
Series<C> pow_int(const Series<C>& a, long e,
                  std::optional<typename Series<C>::Key> hi_request = std::nullopt) {
    if (e == 0) {
        auto one = Series<C>::constant(C(1));
        return hi_request ? truncated_to(one, *hi_request) : one;
    }
    Series<C> base = e < 0 ? inverse(a, hi_request) : a;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Series<C> acc = base;
    --n;
    Series<C> sq = base;
    while (n) {
        if (n & 1) acc = acc * sq;
        n >>= 1;
        if (n) sq = sq * sq;
    }
    if (e > 0 && hi_request && *hi_request < acc.hi()) acc = truncated_to(acc, *hi_request);
    return acc;
}

template <class C>
std::pair<typename Series<C>::Key, typename Series<C>::Key>
common_window(const Series<C>& a, const Series<C>& b) {
    auto lo = std::max(a.lo(), b.lo());
    auto hi = std::min(a.hi(), b.hi());
    if (lo > hi)
        throw InsufficientWindowError("series comparison: windows do not overlap");
    return {lo, hi};
}

/// Coefficientwise equality everywhere both operands are authoritative, i.e.
/// on (-inf, min(hi)] — below its window a series is exactly zero. The
/// overlap [max(lo), min(hi)] must be non-degenerate, else the comparison is
/// refused as meaningless.
template <class C>
bool equal_on_common(const Series<C>& a, const Series<C>& b) {
    auto [lo, hi] = common_window(a, b);
    (void)lo;
    for (const auto& [k, c] : a.terms()) {
        if (k > hi) break;
        if (!(b.coeff(k) == c)) return false;
    }
    for (const auto& [k, c] : b.terms()) {
        if (k > hi) break;
        if (!(a.coeff(k) == c)) return false;
    }
    return true;
}

/// q-side series: coefficients in Q, exponent key k encodes q^(k/2).
/// Doubled keys let half-integer powers live in the same type.
using HalfLaurentSeries = Series<Rat>;

/// u-side series: coefficients in Q(i), key k encodes u^k.
using UPowerSeries = Series<GaussianRat>;

} // namespace vertexlab
