#include "vertexlab/pt_vertex.hpp"

#include <algorithm>
#include <map>

#include "vertexlab/parallel.hpp"

namespace vertexlab {

namespace {

std::array<bool, 3> legs_present_at(const LegTriple& legs, const Box& w) {
    return {in_cylinder(legs, 1, w), in_cylinder(legs, 2, w), in_cylinder(legs, 3, w)};
}

WeightNode make_node(const LegTriple& legs, const Box& w) {
    WeightNode n;
    n.w = w;
    n.leg_present = legs_present_at(legs, w);
    n.k = (n.leg_present[0] ? 1 : 0) + (n.leg_present[1] ? 1 : 0) + (n.leg_present[2] ? 1 : 0);
    n.has_O = w[0] >= 0 && w[1] >= 0 && w[2] >= 0 && n.k >= 1;
    n.d = n.k - (n.has_O ? 1 : 0);
    n.coord_sum = w[0] + w[1] + w[2];
    return n;
}

/// basis slot of leg i (0-based) among the present legs, or -1
int leg_slot(const std::array<bool, 3>& present, int leg) {
    if (!present[static_cast<std::size_t>(leg)]) return -1;
    int slot = 0;
    for (int i = 0; i < leg; ++i)
        if (present[static_cast<std::size_t>(i)]) ++slot;
    return slot;
}

FqVec all_ones(int p, int k) {
    (void)p;
    FqVec v;
    v.dim = k;
    for (int i = 0; i < k; ++i) v.c[static_cast<std::size_t>(i)] = 1;
    return v;
}

std::vector<int> first_primes(int count) {
    std::vector<int> out;
    for (int n = 2; static_cast<int>(out.size()) < count; ++n) {
        bool prime = true;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

} // namespace

int SupportRegion::d2_node_count() const {
    int c = 0;
    for (const auto& n : nodes)
        if (n.d == 2) ++c;
    return c;
}

SupportRegion build_region(const LegTriple& legs, std::int64_t budget) {
    if (budget < 0) throw ValidationError("negative length budget");
    SupportRegion region;
    region.legs = legs;
    region.budget = budget;

    std::vector<Box> boxes;
    std::int64_t ext = legs.extent();
    for (std::int64_t x = 0; x <= ext; ++x)
        for (std::int64_t y = 0; y <= ext; ++y)
            for (std::int64_t z = 0; z <= ext; ++z) {
                Box w{x, y, z};
                if (cylinder_count(legs, w) >= 2) boxes.push_back(w);
            }
    // leg rays: one negative coordinate, cut at the budget depth
    for (int leg = 0; leg < 3; ++leg) {
        const Partition2D& mu = legs[static_cast<std::size_t>(leg)];
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(mu.rows().size()); ++a)
            for (std::int64_t b = 0; b < mu.rows()[static_cast<std::size_t>(a)]; ++b)
                for (std::int64_t m = 1; m <= budget; ++m) {
                    Box w{};
                    if (leg == 0) w = {-m, a, b};
                    if (leg == 1) w = {a, -m, b};
                    if (leg == 2) w = {a, b, -m};
                    boxes.push_back(w);
                }
    }

    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        auto sa = a[0] + a[1] + a[2], sb = b[0] + b[1] + b[2];
        if (sa != sb) return sa < sb;
        return a < b;
    });
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());

    std::map<Box, int> index;
    for (const auto& w : boxes) {
        WeightNode n = make_node(legs, w);
        if (n.d < 1) continue; // free weights only
        index[w] = static_cast<int>(region.nodes.size());
        region.nodes.push_back(n);
    }

    region.out_edges.resize(region.nodes.size());
    region.preds.resize(region.nodes.size());
    for (std::size_t ni = 0; ni < region.nodes.size(); ++ni) {
        const WeightNode& n = region.nodes[ni];
        for (int j = 0; j < 3; ++j) {
            Box t = n.w;
            ++t[static_cast<std::size_t>(j)];
            Edge e;
            auto target_present = legs_present_at(legs, t);
            e.target_k = (target_present[0] ? 1 : 0) + (target_present[1] ? 1 : 0) +
                         (target_present[2] ? 1 : 0);
            for (int leg = 0; leg < 3; ++leg) {
                int src = leg_slot(n.leg_present, leg);
                if (src < 0) continue;
                e.pos_map[static_cast<std::size_t>(src)] = leg_slot(target_present, leg);
            }
            auto it = index.find(t);
            if (it != index.end()) {
                e.kind = EdgeKind::InRegion;
                e.target = it->second;
                region.preds[static_cast<std::size_t>(it->second)].emplace_back(
                    static_cast<int>(ni), j);
            } else {
                WeightNode tn = make_node(legs, t);
                if (tn.d >= 1)
                    throw ConsistencyError("support region dropped a reachable free weight");
                e.kind = tn.has_O ? EdgeKind::ForcedLine : EdgeKind::ForcedZero;
            }
            region.out_edges[ni][static_cast<std::size_t>(j)] = e;
        }
    }
    return region;
}

namespace {

struct Counter {
    const SupportRegion& region;
    int p;
    std::int64_t lmax;
    std::vector<FqSubspace> chosen;     // per node
    std::vector<std::uint64_t> counts;  // by total quotient dimension

    FqSubspace image_through(const FqSubspace& s, const Edge& e) const {
        FqSubspace img = fq_zero_space(p, e.target_k);
        for (const auto& row : s.rows) {
            FqVec v;
            v.dim = e.target_k;
            for (int src = 0; src < row.dim; ++src) {
                int dst = e.pos_map[static_cast<std::size_t>(src)];
                if (dst >= 0) v.c[static_cast<std::size_t>(dst)] = row.c[static_cast<std::size_t>(src)];
            }
            img.insert(v);
        }
        return img;
    }

    bool forced_edges_ok(std::size_t ni, const FqSubspace& s) const {
        for (int j = 0; j < 3; ++j) {
            const Edge& e = region.out_edges[ni][static_cast<std::size_t>(j)];
            if (e.kind == EdgeKind::InRegion) continue;
            FqSubspace img = image_through(s, e);
            if (e.kind == EdgeKind::ForcedZero) {
                if (img.dim() != 0) return false;
            } else {
                FqSubspace line = fq_span(p, e.target_k, {all_ones(p, e.target_k)});
                if (!line.contains_space(img)) return false;
            }
        }
        return true;
    }

    void assign(std::size_t ni, std::int64_t total) {
        if (ni == region.nodes.size()) {
            ++counts[static_cast<std::size_t>(total)];
            return;
        }
        const WeightNode& n = region.nodes[ni];
        // forced lower bound: the section line plus every predecessor image
        FqSubspace base = fq_zero_space(p, n.k);
        if (n.has_O) base.insert(all_ones(p, n.k));
        for (const auto& [pi, j] : region.preds[ni]) {
            const Edge& e = region.out_edges[static_cast<std::size_t>(pi)][static_cast<std::size_t>(j)];
            base = fq_sum(base, image_through(chosen[static_cast<std::size_t>(pi)], e));
        }
        int occupied = n.has_O ? 1 : 0;
        for (const auto& s : fq_all_subspaces(p, n.k)) {
            if (s.dim() < base.dim()) continue;
            std::int64_t contrib = s.dim() - occupied;
            if (contrib < 0 || total + contrib > lmax) continue;
            if (!s.contains_space(base)) continue;
            if (!forced_edges_ok(ni, s)) continue;
            chosen[ni] = s;
            assign(ni + 1, total + contrib);
        }
    }
};

std::vector<std::uint64_t> count_lengths(const SupportRegion& region, std::int64_t lmax, int p) {
    Counter c{region, p, lmax, {}, {}};
    c.chosen.resize(region.nodes.size());
    c.counts.assign(static_cast<std::size_t>(lmax) + 1, 0);
    c.assign(0, 0);
    return c.counts;
}

} // namespace

std::uint64_t count_submodules_fq(const SupportRegion& region, std::int64_t l, int p) {
    if (l < 0) throw ValidationError("negative length");
    if (l > region.budget)
        throw ValidationError("length exceeds the budget the region was built for");
    return count_lengths(region, l, p)[static_cast<std::size_t>(l)];
}

std::vector<std::uint64_t> count_all_lengths_fq(const SupportRegion& region, std::int64_t lmax,
                                                int p) {
    if (lmax > region.budget)
        throw ValidationError("length exceeds the budget the region was built for");
    return count_lengths(region, lmax, p);
}

namespace {

/// Lagrange interpolation through (x_i, y_i), exact coefficients.
std::vector<Rat> interpolate(const std::vector<std::pair<int, std::uint64_t>>& pts) {
    std::size_t n = pts.size();
    std::vector<Rat> acc(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // basis *= (t - x_j)
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] += basis[k] * Rat(-pts[j].first);
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= Rat(pts[i].first - pts[j].first);
        }
        Rat w = Rat(static_cast<unsigned long>(pts[i].second)) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * w;
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

Rat eval_poly(const std::vector<Rat>& poly, const Rat& x) {
    Rat v(0);
    for (std::size_t i = poly.size(); i-- > 0;) v = v * x + poly[i];
    return v;
}

/// Coefficients of P written in powers of (t+1), i.e. of P(s-1) in s.
std::vector<Rat> shift_basis(const std::vector<Rat>& poly) {
    std::vector<Rat> out(poly.size(), Rat(0));
    if (poly.empty()) return out;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) continue;
        // (s-1)^k
        for (std::size_t j = 0; j <= k; ++j) {
            Int b = binomial_general(Int(static_cast<long>(k)), k - j);
            Rat term = poly[k] * Rat(b);
            if ((k - j) % 2 == 1) term = -term;
            out[j] += term;
        }
    }
    return out;
}

} // namespace

std::vector<Int> PtEulerVector::euler() const {
    std::vector<Int> e;
    e.reserve(lengths.size());
    for (const auto& d : lengths) e.push_back(d.euler);
    return e;
}

PtEulerVector pt_euler_counts(const LegTriple& legs, std::int64_t lmax,
                              const SearchLimits& limits) {
    if (lmax < 0) throw ValidationError("lmax must be non-negative");
    if (lmax > limits.max_len) throw ResourceLimitError("lmax exceeds configured max-len limit");

    SupportRegion region = build_region(legs, lmax);
    int d2 = region.d2_node_count();
    std::vector<int> primes = first_primes(d2 + 2);

    std::vector<std::vector<std::uint64_t>> per_prime(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
        per_prime[i] = count_all_lengths_fq(region, lmax, primes[i]);
    });

    PtEulerVector out;
    out.legs = legs;
    out.lmax = lmax;
    for (std::int64_t l = 0; l <= lmax; ++l) {
        PtLengthData data;
        for (std::size_t i = 0; i < primes.size(); ++i)
            data.prime_counts.emplace_back(primes[i], per_prime[i][static_cast<std::size_t>(l)]);

        std::vector<std::pair<int, std::uint64_t>> fit(data.prime_counts.begin(),
                                                       data.prime_counts.end() - 1);
        data.poly = interpolate(fit);
        // the held-out prime decides whether the counts really are polynomial
        const auto& extra = data.prime_counts.back();
        if (eval_poly(data.poly, Rat(extra.first)) != Rat(static_cast<unsigned long>(extra.second)))
            throw ConsistencyError("non-polynomial point count at length " + std::to_string(l) +
                                   " for legs " + legs.to_string());

        std::vector<Rat> comp = shift_basis(data.poly);
        for (const auto& c : comp) {
            if (!rat_is_integer(c) || c < 0)
                throw ConsistencyError(
                    "count polynomial is not a non-negative integer combination of (t+1)^f at "
                    "length " +
                    std::to_string(l) + " for legs " + legs.to_string());
            data.comp_basis.push_back(c.get_num());
        }
        Rat e = eval_poly(data.poly, Rat(1));
        data.euler = e.get_num(); // integral by the basis check
        out.lengths.push_back(std::move(data));
    }
    return out;
}

HalfLaurentSeries pt_vertex(const LegTriple& legs, std::int64_t lmax, const SearchLimits& limits) {
    PtEulerVector ev = pt_euler_counts(legs, lmax, limits);
    std::int64_t vol = renormalized_volume(legs);
    HalfLaurentSeries s(q_key(vol), q_key(vol + lmax));
    for (std::int64_t l = 0; l <= lmax; ++l) {
        Rat c(ev.lengths[static_cast<std::size_t>(l)].euler);
        std::int64_t n = vol + l;
        if (((n % 2) + 2) % 2 == 1) c = -c;
        s.set(q_key(n), c);
    }
    return s;
}

VertexCompareReport vertex_compare(const LegTriple& legs, std::int64_t order,
                                   const SearchLimits& limits) {
    VertexCompareReport report;
    report.order = order;
    report.volume = renormalized_volume(legs);
    HalfLaurentSeries dt = dt_vertex_normalized(legs, order, limits);
    HalfLaurentSeries pt = pt_vertex(legs, order, limits);
    report.equal = true;
    for (std::int64_t l = 0; l <= order; ++l) {
        std::int64_t n = report.volume + l;
        VertexCompareRow row{l, coeff_Q(dt, n), coeff_Q(pt, n)};
        if (row.dt != row.pt) {
            report.equal = false;
            report.diff_orders.push_back(l);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace vertexlab
