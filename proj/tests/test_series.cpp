#include <random>

#include "doctest.h"
#include "vertexlab/qseries.hpp"
#include "vertexlab/rational_function.hpp"

using namespace vertexlab;

namespace {

HalfLaurentSeries random_series(std::mt19937& rng, bool invertible = false) {
    std::uniform_int_distribution<int> lo_d(-3, 2), len_d(3, 8), num_d(-9, 9), den_d(1, 4);
    std::int64_t lo = lo_d(rng);
    std::int64_t hi = lo + len_d(rng);
    HalfLaurentSeries s(q_key(lo), q_key(hi));
    for (std::int64_t n = lo; n <= hi; ++n) {
        Rat c = make_rat(num_d(rng), den_d(rng));
        if (n == lo && invertible && c == 0) c = 1;
        s.set(q_key(n), c);
    }
    if (invertible && coeff_q(s, lo) == 0) s.set(q_key(lo), Rat(1));
    return s;
}

/// Direct convolution on dense vectors, independent of the series engine.
std::vector<Rat> naive_convolve(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// Classic long division of num by den about q = 0, digit by digit.
std::vector<Rat> long_division(std::vector<Rat> num, const std::vector<Rat>& den,
                               std::size_t n_coeffs) {
    REQUIRE(den[0] != 0);
    num.resize(std::max(num.size(), n_coeffs + den.size()), Rat(0));
    std::vector<Rat> out;
    for (std::size_t k = 0; k < n_coeffs; ++k) {
        Rat c = num[k] / den[0];
        out.push_back(c);
        for (std::size_t j = 0; j < den.size() && k + j < num.size(); ++j)
            num[k + j] -= c * den[j];
    }
    return out;
}

} // namespace

TEST_CASE("polynomial products and identity") {
    HalfLaurentSeries one_plus = from_q_poly({Rat(1), Rat(1)});
    HalfLaurentSeries sq = one_plus * one_plus;
    CHECK(coeff_q(sq, 0) == 1);
    CHECK(coeff_q(sq, 1) == 2);
    CHECK(coeff_q(sq, 2) == 1);
    CHECK(sq.exact());

    std::mt19937 rng(7);
    HalfLaurentSeries s = random_series(rng);
    HalfLaurentSeries prod = s * q_one();
    CHECK(equal_on_common(prod, s));
    CHECK(prod.hi() == s.hi());
}

TEST_CASE("telescoping product keeps the full window") {
    // (1-q) * sum_{n=0..5} q^n on window [0,5]: all convolution terms beyond
    // the constant cancel inside the window
    HalfLaurentSeries geo(0, q_key(5));
    for (int n = 0; n <= 5; ++n) geo.set(q_key(n), Rat(1));
    HalfLaurentSeries lhs = from_q_poly({Rat(1), Rat(-1)}) * geo;
    CHECK(lhs.hi() == q_key(5));
    CHECK(coeff_q(lhs, 0) == 1);
    for (int n = 1; n <= 5; ++n) CHECK(coeff_q(lhs, n) == 0);

    // independent dense convolution agrees termwise below the cutoff
    auto conv = naive_convolve({Rat(1), Rat(-1)}, {1, 1, 1, 1, 1, 1});
    for (int n = 0; n <= 5; ++n) CHECK(coeff_q(lhs, n) == conv[static_cast<std::size_t>(n)]);
}

TEST_CASE("window propagation rule for truncated products") {
    HalfLaurentSeries a(q_key(1), q_key(6)); // only window matters here
    a.set(q_key(1), Rat(1));
    HalfLaurentSeries b(q_key(-2), q_key(3));
    b.set(q_key(-2), Rat(1));
    HalfLaurentSeries p = a * b;
    CHECK(p.lo() == q_key(-1));
    CHECK(p.hi() == std::min(q_key(6) + q_key(-2), q_key(1) + q_key(3)));
}

TEST_CASE("geometric and monomial inverses") {
    HalfLaurentSeries inv = inverse(from_q_poly({Rat(1), Rat(-1)}), q_key(6));
    for (int n = 0; n <= 6; ++n) CHECK(coeff_q(inv, n) == 1);

    HalfLaurentSeries qinv = inverse(q_monomial(1), q_key(-1));
    CHECK(coeff_q(qinv, -1) == 1);
    CHECK(qinv.lo() == q_key(-1));

    HalfLaurentSeries m(0, q_key(3)); // MacMahon prefix in Q = -q
    m.set(q_key(0), Rat(1));
    m.set(q_key(1), Rat(-1)); // Q
    m.set(q_key(2), Rat(3));  // 3Q^2
    m.set(q_key(3), Rat(-6)); // 6Q^3
    HalfLaurentSeries mi = inverse(m);
    // hand-solved triangular convolution: M^-1 = 1 - Q - 2Q^2 - Q^3
    CHECK(coeff_Q(mi, 0) == 1);
    CHECK(coeff_Q(mi, 1) == -1);
    CHECK(coeff_Q(mi, 2) == -2);
    CHECK(coeff_Q(mi, 3) == -1);
    CHECK(mi.hi() == q_key(3));
}

TEST_CASE("inverse contract violations are loud") {
    HalfLaurentSeries z(0, q_key(4));
    CHECK_THROWS_AS((void)inverse(z), ValidationError);
    HalfLaurentSeries s(0, q_key(4));
    s.set(q_key(1), Rat(1)); // zero at window lo
    CHECK_THROWS_AS((void)inverse(s), ValidationError);
    CHECK_THROWS_AS((void)inverse(q_one()), ValidationError); // exact needs order
    HalfLaurentSeries w(0, q_key(2));
    w.set(0, Rat(1));
    CHECK_THROWS_AS((void)inverse(w, q_key(5)), InsufficientWindowError);
}

TEST_CASE("ring axioms on random truncated series") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        HalfLaurentSeries a = random_series(rng);
        HalfLaurentSeries b = random_series(rng);
        HalfLaurentSeries c = random_series(rng);
        CHECK(equal_on_common((a * b) * c, a * (b * c)));
        CHECK(equal_on_common(a * (b + c), a * b + a * c));
        CHECK(equal_on_common(a * b, b * a));
        CHECK(equal_on_common((a + b) + c, a + (b + c)));
    }
}

TEST_CASE("mul by inverse gives 1 on the computed window") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        HalfLaurentSeries a = random_series(rng, true);
        HalfLaurentSeries inv = inverse(a);
        HalfLaurentSeries prod = a * inv;
        CHECK(coeff_q(prod, 0) == 1);
        for (std::int64_t k = prod.lo(); k <= prod.hi(); ++k)
            if (k != 0) CHECK(prod.coeff(k) == 0);
    }
}

TEST_CASE("coefficient reads beyond the window refuse to answer") {
    HalfLaurentSeries s(0, q_key(3));
    s.set(q_key(1), Rat(5));
    CHECK(coeff_q(s, -2) == 0);  // below lo: known zero
    CHECK(coeff_q(s, 2) == 0);   // inside window, absent
    CHECK_THROWS_AS((void)coeff_q(s, 4), InsufficientWindowError);

    HalfLaurentSeries far(q_key(10), q_key(12));
    far.set(q_key(10), Rat(1));
    CHECK_THROWS_AS((void)equal_on_common(truncated_to(s, q_key(2)), far),
                    InsufficientWindowError);
}

TEST_CASE("substitution q -> (-1)^(r+1) q^r") {
    // q under r=2: -q ->  (-q)^2 = q^2, so q -> -q^2
    HalfLaurentSeries q = q_monomial(1);
    HalfLaurentSeries r2 = subst_neg_power(q, 2);
    CHECK(coeff_q(r2, 2) == -1);

    // (-q) - 2 + (-q)^-1 under r=3 -> (-q)^3 - 2 + (-q)^-3
    HalfLaurentSeries phi(q_key(-1), HalfLaurentSeries::kInf);
    phi.set(q_key(-1), Rat(-1));
    phi.set(q_key(0), Rat(-2));
    phi.set(q_key(1), Rat(-1));
    HalfLaurentSeries r3 = subst_neg_power(phi, 3);
    CHECK(coeff_Q(r3, -3) == 1);
    CHECK(coeff_Q(r3, 0) == -2);
    CHECK(coeff_Q(r3, 3) == 1);

    // half-integer exponent under even r leaves the field
    HalfLaurentSeries half = HalfLaurentSeries::monomial(1, Rat(1)); // q^(1/2)
    CHECK_THROWS_AS((void)subst_neg_power(half, 2), ValidationError);
    CHECK_NOTHROW((void)subst_neg_power(half, 3));
}

TEST_CASE("rational function expansion matches long division") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> cd(-4, 4), deg_d(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Poly num(static_cast<std::size_t>(deg_d(rng)) + 1);
        Poly den(static_cast<std::size_t>(deg_d(rng)) + 1);
        for (auto& c : num) c = Rat(cd(rng));
        for (auto& c : den) c = Rat(cd(rng));
        den[0] = Rat(cd(rng) == 0 ? 1 : cd(rng)); // unit constant term
        if (polydetail::is_zero(num)) num[0] = 1;
        RationalFunction rf(num, den);
        HalfLaurentSeries s = rf.expand(10);
        auto oracle = long_division(num, den, 11);
        for (int n = 0; n <= 10; ++n)
            CHECK(coeff_q(s, n) == oracle[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("q <-> 1/q symmetry is decided exactly") {
    RationalFunction a({Rat(0), Rat(1)}, {Rat(1), Rat(2), Rat(1)}); // q/(1+q)^2
    CHECK(a.symmetric_under_q_inverse());
    RationalFunction b({Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(1)}); // q/(1+q+q^2)
    CHECK(b.symmetric_under_q_inverse());
    RationalFunction c({Rat(0), Rat(1)}, {Rat(1)}); // q
    CHECK_FALSE(c.symmetric_under_q_inverse());
    // expansion about q=0 with a vanishing denominator constant term
    RationalFunction d({Rat(1)}, {Rat(0), Rat(0), Rat(1)}); // 1/q^2
    HalfLaurentSeries ds = d.expand(2);
    CHECK(coeff_q(ds, -2) == 1);
    CHECK(d.symmetric_under_q_inverse() == false);
}

TEST_CASE("rational literals round-trip") {
    CHECK(rat_to_string(rat_from_string("-22/7")) == "-22/7");
    CHECK(rat_to_string(rat_from_string("4/2")) == "2");
    CHECK_THROWS_AS((void)rat_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS((void)rat_from_string("x"), ValidationError);
}

TEST_CASE("series renderers") {
    HalfLaurentSeries s(q_key(-2), q_key(3));
    s.set(q_key(-2), Rat(1));
    s.set(q_key(-1), Rat(-2));
    s.set(q_key(0), Rat(4));
    s.set(q_key(1), Rat(-6));
    CHECK(render_q(s) == "q^-2 - 2*q^-1 + 4 - 6*q");
    CHECK(render_negq_factored(s) == "(-q)^-2 * (1 + 2(-q) + 4(-q)^2 + 6(-q)^3)");
}
