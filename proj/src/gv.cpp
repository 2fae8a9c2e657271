#include "vertexlab/gv.hpp"

#include <algorithm>
#include <functional>

namespace vertexlab {

namespace {

std::vector<std::int64_t> divisors_above_one(std::int64_t d) {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 2; r <= d; ++r)
        if (d % r == 0) out.push_back(r);
    return out;
}

std::vector<ClassVector> classes_by_degree(const MultiClassSeries& f) {
    std::vector<ClassVector> order;
    order.reserve(f.terms.size());
    for (const auto& [cls, s] : f.terms) {
        (void)s;
        order.push_back(cls);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](const ClassVector& a, const ClassVector& b) {
                         auto da = f.degree(a), db = f.degree(b);
                         if (da != db) return da < db;
                         return a < b;
                     });
    return order;
}

/// Polar depth the exp/log products can eat through, used to pad internal
/// expansion orders so the final windows still certify hi_int.
std::int64_t exp_padding(const GVTable& table, std::int64_t cutoff) {
    std::int64_t deepest = 0;
    for (const auto& [key, n] : table.entries) {
        (void)n;
        long g = key.first;
        if (g >= 2) {
            std::int64_t deg = class_degree(key.second, table.weights);
            std::int64_t kmax = std::max<std::int64_t>(1, cutoff / std::max<std::int64_t>(1, deg));
            deepest = std::max(deepest, kmax * (g - 1));
        }
    }
    return cutoff * deepest + 2;
}

} // namespace

std::map<std::int64_t, Rat> phi_Q_coeffs(long gm1, std::int64_t l_hi) {
    std::map<std::int64_t, Rat> out;
    if (gm1 >= 0) {
        // (Q - 2 + Q^-1)^gm1 by iterated convolution
        std::map<std::int64_t, Rat> acc{{0, Rat(1)}};
        for (long i = 0; i < gm1; ++i) {
            std::map<std::int64_t, Rat> next;
            for (const auto& [l, c] : acc) {
                next[l + 1] += c;
                next[l] += Rat(-2) * c;
                next[l - 1] += c;
            }
            acc = std::move(next);
        }
        for (auto& [l, c] : acc)
            if (c != 0) out.emplace(l, std::move(c));
        return out;
    }
    // Phi(Q)^(-m) = Q^m (1-Q)^(-2m): coefficient of Q^(m+k) is binom(2m-1+k, k)
    long m = -gm1;
    for (std::int64_t k = 0; m + k <= l_hi; ++k)
        out.emplace(m + k,
                    Rat(binomial_general(Int(2 * m - 1 + k), static_cast<std::uint64_t>(k))));
    return out;
}

HalfLaurentSeries phi_power(long gm1, long r, std::optional<std::int64_t> hi_int) {
    if (r < 1) throw ValidationError("phi_power: cover index r must be positive");
    if (gm1 < 0 && !hi_int)
        throw ValidationError("phi_power: negative powers need an expansion order");
    std::int64_t l_hi = 0;
    if (gm1 < 0) l_hi = *hi_int >= 0 ? *hi_int / r : 0;
    auto phis = phi_Q_coeffs(gm1, l_hi);

    HalfLaurentSeries s = gm1 >= 0
                              ? HalfLaurentSeries(q_key(-r * gm1), HalfLaurentSeries::kInf)
                              : HalfLaurentSeries(q_key(r * (-gm1)), q_key(*hi_int));
    for (const auto& [l, c] : phis) {
        std::int64_t n = r * l;
        if (!s.exact() && q_key(n) > s.hi()) continue;
        Rat v = c;
        if (((n % 2) + 2) % 2 == 1) v = -v;
        s.set(q_key(n), v);
    }
    return s;
}

PhiDecomposition v0_decompose(const HalfLaurentSeries& series) {
    if (series.exact())
        throw ValidationError("decomposition needs a finite window; truncate the series first");
    for (const auto& [k, c] : series.terms()) {
        (void)c;
        if (k % 2 != 0)
            throw ValidationError("decomposition basis has integer exponents only");
    }
    PhiDecomposition dec;
    dec.window_lo_int = lo_int(series);
    dec.window_hi_int = hi_int(series);
    HalfLaurentSeries work = series;
    for (std::int64_t n = dec.window_lo_int; n <= dec.window_hi_int; ++n) {
        Rat c = coeff_q(work, n);
        if (c == 0) continue;
        long g = static_cast<long>(1 - n);
        // Phi(-q)^(g-1) leads with (-1)^n q^n
        Rat lg = (((n % 2) + 2) % 2 == 0) ? c : -c;
        dec.coeffs[g] = lg;
        work = work - scale(phi_power(g - 1, 1, dec.window_hi_int), lg);
    }
    if (!work.is_zero_on_window())
        throw ConsistencyError("triangular basis solve left a nonzero residual");
    return dec;
}

HalfLaurentSeries phi_recombine(const std::map<long, Rat>& coeffs, std::int64_t hi_int_req) {
    HalfLaurentSeries acc = HalfLaurentSeries::zero(0, q_key(hi_int_req));
    for (const auto& [g, lg] : coeffs)
        acc = acc + scale(phi_power(g - 1, 1, hi_int_req), lg);
    return acc;
}

GVTable extract_gv(const MultiClassSeries& connected) {
    GVTable table(connected.weights, connected.cutoff);
    for (const auto& cls : classes_by_degree(connected)) {
        HalfLaurentSeries s = connected.terms.at(cls);
        if (s.exact())
            throw ValidationError("extraction needs finite class windows; truncate first");
        std::int64_t div = class_divisibility(cls);
        if (hi_int(s) < div)
            throw InsufficientWindowError(
                "class window must reach q-order div(beta) for cover subtraction");
        for (std::int64_t r : divisors_above_one(div)) {
            ClassVector base = class_divide(cls, r);
            for (const auto& [key, n] : table.entries) {
                if (key.second != base) continue;
                long g = key.first;
                Rat factor = n / Rat(static_cast<long>(r));
                if (g % 2 == 0) factor = -factor; // (-1)^(g-1)
                s = s - scale(phi_power(g - 1, static_cast<long>(r), hi_int(s)), factor);
            }
        }
        PhiDecomposition dec = v0_decompose(s);
        for (const auto& [g, lg] : dec.coeffs) {
            Rat n = (g % 2 != 0) ? lg : -lg; // (-1)^(g-1) l_g
            table.set(g, cls, n);
        }
        table.genus_floor[cls] = static_cast<long>(1 - dec.window_hi_int);
    }
    return table;
}

MultiClassSeries gv_connected(const GVTable& table, std::int64_t hi_int_req,
                              std::int64_t cutoff) {
    std::int64_t pad = hi_int_req + exp_padding(table, cutoff);
    MultiClassSeries f(table.weights, cutoff, Rat(0));
    for (const auto& [key, n] : table.entries) {
        long g = key.first;
        const ClassVector& cls = key.second;
        std::int64_t deg = class_degree(cls, table.weights);
        Rat ntilde = (g % 2 != 0) ? n : -n;
        for (std::int64_t k = 1; k * deg <= cutoff; ++k) {
            Rat coeff = ntilde / Rat(static_cast<long>(k));
            f.add_term(class_scale(cls, k),
                       scale(phi_power(g - 1, static_cast<long>(k), pad), coeff));
        }
    }
    return f;
}

namespace {

MultiClassSeries truncate_classes(MultiClassSeries z, std::int64_t hi_int_req) {
    for (auto& [cls, s] : z.terms) {
        (void)cls;
        if (s.hi() > q_key(hi_int_req) && q_key(hi_int_req) >= s.lo())
            s = truncated_to(s, q_key(hi_int_req));
    }
    return z;
}

} // namespace

MultiClassSeries gv_generate(const GVTable& table, std::int64_t hi_int_req,
                             std::int64_t cutoff) {
    return truncate_classes(graded_exp(gv_connected(table, hi_int_req, cutoff)), hi_int_req);
}

MultiClassSeries product_form(const GVTable& table, std::int64_t hi_int_req,
                              std::int64_t cutoff) {
    if (!table.integral()) return gv_generate(table, hi_int_req, cutoff);
    MultiClassSeries acc(table.weights, cutoff, Rat(1));
    for (const auto& [key, n] : table.entries) {
        long g = key.first;
        const ClassVector& cls = key.second;
        std::int64_t deg = class_degree(cls, table.weights);
        Rat ntilde = (g % 2 != 0) ? n : -n;
        auto phis = phi_Q_coeffs(g - 1, hi_int_req);
        for (const auto& [l, phi_l] : phis) {
            // factor (1 - Q^l v^cls)^(-E), E = ntilde * phi_l
            Rat e_rat = ntilde * phi_l;
            if (e_rat == 0) continue;
            Int e = e_rat.get_num();
            MultiClassSeries factor(table.weights, cutoff, Rat(1));
            for (std::int64_t k = 1; k * deg <= cutoff; ++k) {
                Int b = binomial_general(e + Int(static_cast<long>(k - 1)),
                                         static_cast<std::uint64_t>(k));
                if (b == 0) continue;
                Rat c{b};
                std::int64_t n_q = l * k;
                if (((n_q % 2) + 2) % 2 == 1) c = -c;
                factor.add_term(class_scale(cls, k),
                                HalfLaurentSeries::monomial(q_key(n_q), c));
            }
            acc = mc_mul(acc, factor);
        }
    }
    // factors with Q-order above hi_int were never multiplied in: cap claims
    for (auto& [cls, s] : acc.terms) {
        (void)cls;
        HalfLaurentSeries capped(std::min(s.lo(), q_key(hi_int_req)), q_key(hi_int_req));
        for (const auto& [k, c] : s.terms()) {
            if (k > q_key(hi_int_req)) break;
            capped.set(k, c);
        }
        s = std::move(capped);
    }
    return acc;
}

IntegralityReport integrality_check_table(const GVTable& table, std::int64_t hi_int_req) {
    IntegralityReport report;
    for (const auto& [key, n] : table.entries)
        if (!rat_is_integer(n))
            report.table_violations.push_back({key.second, key.first, n});
    MultiClassSeries z = gv_generate(table, hi_int_req, table.cutoff);
    for (const auto& [cls, s] : z.terms)
        for (const auto& [k, c] : s.terms())
            if (!rat_is_integer(c))
                report.series_violations.push_back({cls, k / 2, c});
    return report;
}

IntegralityReport integrality_check_series(const MultiClassSeries& z) {
    IntegralityReport report;
    for (const auto& [cls, s] : z.terms)
        for (const auto& [k, c] : s.terms())
            if (!rat_is_integer(c))
                report.series_violations.push_back({cls, k / 2, c});
    GVTable table = extract_gv(graded_log(z));
    for (const auto& [key, n] : table.entries)
        if (!rat_is_integer(n))
            report.table_violations.push_back({key.second, key.first, n});
    return report;
}

std::vector<std::pair<long, ClassVector>> vanishing_check(const GVTable& table) {
    std::vector<std::pair<long, ClassVector>> out;
    for (const auto& [key, n] : table.entries) {
        (void)n;
        if (key.first < 0) out.push_back(key);
    }
    return out;
}

VdMembership vd_membership(const HalfLaurentSeries& series, long d) {
    if (d < 1) throw ValidationError("vd_membership: d must be positive");
    if (series.exact())
        throw ValidationError("vd_membership needs a finite window; truncate the series first");
    VdMembership result;
    HalfLaurentSeries work = series;
    std::int64_t hi = hi_int(series);
    // poles and the constant term live in the Laurent-polynomial part (g >= 1)
    for (std::int64_t n = lo_int(series); n <= std::min<std::int64_t>(0, hi); ++n) {
        Rat c = coeff_q(work, n);
        if (c == 0) continue;
        long g = static_cast<long>(1 - n);
        Rat lg = (((n % 2) + 2) % 2 == 0) ? c : -c;
        result.v0_coeffs[g] = lg;
        work = work - scale(phi_power(g - 1, 1, hi), lg);
    }
    // orders 1..d are matched by the cover basis elements Phi((-q)^r)^(-1)
    for (std::int64_t r = 1; r <= d && r <= hi; ++r) {
        Rat c = coeff_q(work, r);
        if (c == 0) continue;
        Rat cr = (r % 2 == 0) ? c : -c; // lead of Phi((-q)^r)^(-1) is (-1)^r q^r
        result.cover_coeffs[r] = cr;
        work = work - scale(phi_power(-1, static_cast<long>(r), hi), cr);
    }
    for (std::int64_t n = std::max<std::int64_t>(1, lo_int(series)); n <= hi; ++n) {
        if (coeff_q(work, n) != 0) {
            result.member = false;
            result.failure_order = n;
            return result;
        }
    }
    result.member = true;
    return result;
}

TruncationData truncate_low_orders(const MultiClassSeries& z, std::int64_t n_max) {
    TruncationData data;
    for (const auto& [cls, s] : z.terms) {
        std::map<std::int64_t, Rat> row;
        for (const auto& [k, c] : s.terms()) {
            if (k % 2 != 0) throw ValidationError("half-integer exponent in truncation data");
            if (k <= q_key(n_max)) row.emplace(k / 2, c);
        }
        if (hi_int(s) < n_max)
            throw InsufficientWindowError("class window does not reach the truncation order");
        data.emplace(cls, std::move(row));
    }
    return data;
}

namespace {

std::vector<ClassVector> all_effective_classes(const std::vector<std::int64_t>& weights,
                                               std::int64_t cutoff) {
    std::vector<ClassVector> out;
    ClassVector current(weights.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t deg) {
        if (i == weights.size()) {
            if (class_is_effective(current)) out.push_back(current);
            return;
        }
        for (std::int64_t v = 0; deg + v * weights[i] <= cutoff; ++v) {
            current[i] = v;
            rec(i + 1, deg + v * weights[i]);
        }
        current[i] = 0;
    };
    rec(0, 0);
    std::stable_sort(out.begin(), out.end(), [&](const ClassVector& a, const ClassVector& b) {
        auto da = class_degree(a, weights), db = class_degree(b, weights);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

} // namespace

Reconstruction reconstruct_from_truncation(const TruncationData& data,
                                           const std::vector<std::int64_t>& weights,
                                           std::int64_t cutoff, std::int64_t hi_int_req) {
    for (const auto& [cls, row] : data) {
        (void)row;
        if (!class_is_effective(cls)) throw ValidationError("non-effective class in input data");
        if (class_degree(cls, weights) > cutoff)
            throw ValidationError("input class beyond degree cutoff");
    }

    GVTable table(weights, cutoff);
    // deepest pole the data can force: the most negative coefficient order
    std::int64_t deepest = 0;
    for (const auto& [cls, row] : data) {
        (void)cls;
        for (const auto& [n, c] : row) {
            (void)c;
            deepest = std::min(deepest, n);
        }
    }

    for (const ClassVector& cls : all_effective_classes(weights, cutoff)) {
        // known part of the v^cls coefficient from already-solved classes
        // (covers of cls included); what is missing is exactly the k=1 layer
        std::int64_t probe = 1 + exp_padding(table, cutoff);
        MultiClassSeries z_known = graded_exp(gv_connected(table, probe, cutoff));
        HalfLaurentSeries known = z_known.term_or_zero(cls);

        std::map<std::int64_t, Rat> row;
        if (auto it = data.find(cls); it != data.end()) row = it->second;

        std::int64_t lo = deepest;
        if (auto low = known.lowest_term()) lo = std::min(lo, *low / 2);
        HalfLaurentSeries theta(q_key(lo), q_key(1));
        for (std::int64_t n = lo; n <= 1; ++n) {
            Rat z_coeff(0);
            if (auto it = row.find(n); it != row.end()) z_coeff = it->second;
            theta.set(q_key(n), z_coeff - coeff_q(known, n));
        }
        PhiDecomposition dec = v0_decompose(theta);
        for (const auto& [g, lg] : dec.coeffs) {
            if (g < 0)
                throw ConsistencyError(
                    "reconstruction produced a negative-genus term; data violates the vanishing "
                    "assumption");
            Rat n = (g % 2 != 0) ? lg : -lg;
            table.set(g, cls, n);
        }
    }

    Reconstruction rec{std::move(table), MultiClassSeries{}};
    rec.z = gv_generate(rec.table, hi_int_req, cutoff);

    // every provided coefficient must be reproduced exactly
    for (const auto& [cls, row] : data) {
        HalfLaurentSeries s = rec.z.term_or_zero(cls);
        for (const auto& [n, c] : row) {
            if (coeff_q(s, n) != c)
                throw ConsistencyError("reconstruction failed to reproduce the input at class " +
                                       [&] {
                                           std::string t;
                                           for (auto x : cls) t += std::to_string(x) + ",";
                                           return t;
                                       }() +
                                       " order " + std::to_string(n));
        }
    }
    return rec;
}

std::map<long, Rat> fano_extract(const HalfLaurentSeries& series, long c) {
    if (c < 0) throw ValidationError("fano_extract: c must be non-negative");
    if (series.exact())
        throw ValidationError("fano_extract needs a finite window; truncate the series first");
    HalfLaurentSeries work = series;
    if (c > 0) {
        std::int64_t need = hi_int(series) - lo_int(series);
        work = series * one_plus_q_pow(-c, need);
    }
    PhiDecomposition dec = v0_decompose(work);
    std::map<long, Rat> out;
    for (const auto& [g, lg] : dec.coeffs) {
        Rat n = (g % 2 != 0) ? lg : -lg;
        if (n != 0) out.emplace(g, n);
    }
    return out;
}

} // namespace vertexlab
