#include "vertexlab/dt_vertex.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "vertexlab/parallel.hpp"

namespace vertexlab {

namespace {

struct BoxHash {
    std::size_t operator()(const Box& b) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : b) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using BoxSet = std::unordered_set<Box, BoxHash>;

struct Enumerator {
    const LegTriple& legs;
    std::int64_t bound; // coordinate bound for added boxes
    std::int64_t lmax;
    std::uint64_t max_states;

    bool in_pi(const BoxSet& added, const Box& w) const {
        if (minimal_membership(legs, w)) return true;
        return added.count(w) != 0;
    }

    bool addable(const BoxSet& added, const Box& w) const {
        if (w[0] < 0 || w[1] < 0 || w[2] < 0) return false;
        if (w[0] > bound || w[1] > bound || w[2] > bound) return false;
        if (minimal_membership(legs, w) || added.count(w)) return false;
        for (int j = 0; j < 3; ++j) {
            if (w[j] == 0) continue;
            Box p = w;
            --p[j];
            if (!in_pi(added, p)) return false;
        }
        return true;
    }

    /// DFS over lex-increasing additions. `cands` holds the addable boxes
    /// lex-greater than the last added box; a new addition b can only create
    /// addable boxes at b + e_j.
    void dfs(BoxSet& added, const std::vector<Box>& cands, DtCountVector& counts,
             std::uint64_t& states) const {
        if (++states > max_states)
            throw ResourceLimitError("box-configuration search exceeded max-states limit");
        std::int64_t len = static_cast<std::int64_t>(added.size());
        ++counts[static_cast<std::size_t>(len)];
        if (len == lmax) return;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const Box& b = cands[i];
            std::vector<Box> next;
            next.reserve(cands.size() + 3);
            next.insert(next.end(), cands.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        cands.end());
            added.insert(b);
            for (int j = 0; j < 3; ++j) {
                Box c = b;
                ++c[j];
                if (addable(added, c)) next.push_back(c);
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            dfs(added, next, counts, states);
            added.erase(b);
        }
    }

    std::vector<Box> root_candidates() const {
        BoxSet empty;
        std::vector<Box> roots;
        for (std::int64_t x = 0; x <= bound; ++x)
            for (std::int64_t y = 0; y <= bound; ++y)
                for (std::int64_t z = 0; z <= bound; ++z) {
                    Box w{x, y, z};
                    if (addable(empty, w)) roots.push_back(w);
                }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
};

} // namespace

DtCountVector dt_counts(const LegTriple& legs, std::int64_t lmax, const SearchLimits& limits) {
    if (lmax < 0) throw ValidationError("lmax must be non-negative");
    if (lmax > limits.max_len)
        throw ResourceLimitError("lmax exceeds configured max-len limit");
    Enumerator e{legs, legs.extent() + lmax, lmax, limits.max_states};
    DtCountVector counts(static_cast<std::size_t>(lmax) + 1, 0);
    counts[0] = 1;
    if (lmax == 0) return counts;

    std::vector<Box> roots = e.root_candidates();
    // fan out over the first added box; each branch enumerates independently
    std::vector<DtCountVector> partial(roots.size());
    parallel_for(roots.size(), [&](std::size_t i) {
        DtCountVector local(static_cast<std::size_t>(lmax) + 1, 0);
        BoxSet added;
        added.insert(roots[i]);
        std::vector<Box> cands;
        for (std::size_t j = i + 1; j < roots.size(); ++j) cands.push_back(roots[j]);
        for (int j = 0; j < 3; ++j) {
            Box c = roots[i];
            ++c[j];
            if (e.addable(added, c)) cands.push_back(c);
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        std::uint64_t states = 0;
        e.dfs(added, cands, local, states);
        partial[i] = std::move(local);
    });
    for (const auto& local : partial)
        for (std::size_t l = 0; l < local.size(); ++l) counts[l] += local[l];
    return counts;
}

HalfLaurentSeries macmahon(std::int64_t hi_int) {
    if (hi_int < 0) throw ValidationError("macmahon: negative order");
    // work in Q = -q with plain rational coefficients
    std::vector<Rat> acc(static_cast<std::size_t>(hi_int) + 1, Rat(0));
    acc[0] = 1;
    for (std::int64_t n = 1; n <= hi_int; ++n) {
        // multiply by (1 - Q^n)^(-n) = sum_k binom(n+k-1, k) Q^(nk)
        std::vector<Rat> next(acc.size(), Rat(0));
        for (std::int64_t k = 0; n * k <= hi_int; ++k) {
            Rat b(binomial_general(Int(n + k - 1), static_cast<std::uint64_t>(k)));
            for (std::size_t i = 0; i + static_cast<std::size_t>(n * k) < next.size(); ++i)
                if (acc[i] != 0) next[i + static_cast<std::size_t>(n * k)] += acc[i] * b;
        }
        acc = std::move(next);
    }
    HalfLaurentSeries s(0, q_key(hi_int));
    for (std::int64_t n = 0; n <= hi_int; ++n) {
        Rat c = acc[static_cast<std::size_t>(n)];
        if (n % 2 != 0) c = -c;
        s.set(q_key(n), c);
    }
    return s;
}

HalfLaurentSeries dt_series(const LegTriple& legs, std::int64_t lmax, const SearchLimits& limits) {
    DtCountVector counts = dt_counts(legs, lmax, limits);
    std::int64_t vol = renormalized_volume(legs);
    HalfLaurentSeries s(q_key(vol), q_key(vol + lmax));
    for (std::int64_t l = 0; l <= lmax; ++l) {
        Rat c(static_cast<unsigned long>(counts[static_cast<std::size_t>(l)]));
        std::int64_t n = vol + l;
        if (((n % 2) + 2) % 2 == 1) c = -c;
        s.set(q_key(n), c);
    }
    return s;
}

HalfLaurentSeries dt_vertex_normalized(const LegTriple& legs, std::int64_t lmax,
                                       const SearchLimits& limits) {
    HalfLaurentSeries z = dt_series(legs, lmax, limits);
    HalfLaurentSeries m = macmahon(lmax);
    return z * inverse(m);
}

} // namespace vertexlab
