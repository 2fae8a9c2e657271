#include "vertexlab/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace vertexlab {

namespace {

int mod_inv(int a, int p) {
    // p is a small prime, a != 0 mod p
    int r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

int pivot(const FqVec& v) {
    for (int i = 0; i < v.dim; ++i)
        if (v.c[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

} // namespace

bool FqSubspace::contains(const FqVec& v) const {
    FqVec w = v;
    for (const auto& r : rows) {
        int pv = pivot(r);
        int coef = w.c[static_cast<std::size_t>(pv)];
        if (coef != 0)
            for (int i = 0; i < w.dim; ++i)
                w.c[static_cast<std::size_t>(i)] =
                    ((w.c[static_cast<std::size_t>(i)] - coef * r.c[static_cast<std::size_t>(i)]) % p + p) % p;
    }
    return pivot(w) == -1;
}

bool FqSubspace::contains_space(const FqSubspace& other) const {
    for (const auto& r : other.rows)
        if (!contains(r)) return false;
    return true;
}

bool FqSubspace::insert(const FqVec& v) {
    FqVec w = v;
    for (const auto& r : rows) {
        int pv = pivot(r);
        int coef = w.c[static_cast<std::size_t>(pv)];
        if (coef != 0)
            for (int i = 0; i < w.dim; ++i)
                w.c[static_cast<std::size_t>(i)] =
                    ((w.c[static_cast<std::size_t>(i)] - coef * r.c[static_cast<std::size_t>(i)]) % p + p) % p;
    }
    int pv = pivot(w);
    if (pv == -1) return false;
    int il = mod_inv(w.c[static_cast<std::size_t>(pv)], p);
    for (int i = 0; i < w.dim; ++i)
        w.c[static_cast<std::size_t>(i)] = w.c[static_cast<std::size_t>(i)] * il % p;
    rows.push_back(w);
    // restore echelon: sort by pivot, then clear above-pivot entries
    std::sort(rows.begin(), rows.end(),
              [](const FqVec& a, const FqVec& b) { return pivot(a) < pivot(b); });
    for (std::size_t j = 0; j < rows.size(); ++j) {
        int pj = pivot(rows[j]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == j) continue;
            int coef = rows[i].c[static_cast<std::size_t>(pj)];
            if (coef != 0)
                for (int t = 0; t < rows[i].dim; ++t)
                    rows[i].c[static_cast<std::size_t>(t)] =
                        ((rows[i].c[static_cast<std::size_t>(t)] - coef * rows[j].c[static_cast<std::size_t>(t)]) % p +
                         p) %
                        p;
        }
    }
    return true;
}

bool operator==(const FqSubspace& a, const FqSubspace& b) {
    if (a.p != b.p || a.dim_ambient != b.dim_ambient || a.rows.size() != b.rows.size())
        return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        if (a.rows[i].c != b.rows[i].c) return false;
    return true;
}

bool operator<(const FqSubspace& a, const FqSubspace& b) {
    if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        if (a.rows[i].c != b.rows[i].c) return a.rows[i].c < b.rows[i].c;
    return false;
}

FqSubspace fq_zero_space(int p, int k) { return FqSubspace{p, k, {}}; }

FqSubspace fq_full_space(int p, int k) {
    FqSubspace s{p, k, {}};
    for (int i = 0; i < k; ++i) {
        FqVec e;
        e.dim = k;
        e.c[static_cast<std::size_t>(i)] = 1;
        s.rows.push_back(e);
    }
    return s;
}

FqSubspace fq_span(int p, int k, const std::vector<FqVec>& gens) {
    FqSubspace s{p, k, {}};
    for (const auto& g : gens) s.insert(g);
    return s;
}

FqSubspace fq_sum(const FqSubspace& a, const FqSubspace& b) {
    FqSubspace s = a;
    for (const auto& r : b.rows) s.insert(r);
    return s;
}

const std::vector<FqSubspace>& fq_all_subspaces(int p, int k) {
    static std::map<std::pair<int, int>, std::vector<FqSubspace>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (k < 0 || k > 3) throw ValidationError("fq_all_subspaces supports ambient dimension <= 3");
    std::vector<FqSubspace> out;
    out.push_back(fq_zero_space(p, k));
    if (k >= 1) {
        // lines: canonical generators with leading coefficient 1
        std::vector<FqVec> lines;
        for (int x0 = 0; x0 < (k > 0 ? p : 1); ++x0)
            for (int x1 = 0; x1 < (k > 1 ? p : 1); ++x1)
                for (int x2 = 0; x2 < (k > 2 ? p : 1); ++x2) {
                    FqVec v;
                    v.dim = k;
                    v.c = {x0, x1, x2};
                    int pv = pivot(v);
                    if (pv == -1) continue;
                    if (v.c[static_cast<std::size_t>(pv)] != 1) continue;
                    lines.push_back(v);
                }
        if (k == 1) {
            out.push_back(fq_full_space(p, k));
        } else {
            for (const auto& v : lines) out.push_back(fq_span(p, k, {v}));
            if (k == 2) {
                out.push_back(fq_full_space(p, k));
            } else {
                // planes in F^3 = null spaces of the canonical functionals
                for (const auto& f : lines) {
                    FqSubspace s{p, k, {}};
                    for (int x0 = 0; x0 < p && s.dim() < 2; ++x0)
                        for (int x1 = 0; x1 < p && s.dim() < 2; ++x1)
                            for (int x2 = 0; x2 < p && s.dim() < 2; ++x2) {
                                FqVec v;
                                v.dim = 3;
                                v.c = {x0, x1, x2};
                                if ((f.c[0] * x0 + f.c[1] * x1 + f.c[2] * x2) % p == 0)
                                    s.insert(v);
                            }
                    out.push_back(s);
                }
                out.push_back(fq_full_space(p, k));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return cache.emplace(key, std::move(out)).first->second;
}

} // namespace vertexlab
