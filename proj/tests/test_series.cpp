#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvecount/dual.hpp"
#include "curvecount/series.hpp"

using namespace curvecount;

namespace {

std::mt19937_64 rng(5771);

Rational random_rational(bool nonzero = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

template <Ring R>
R random_coeff();

template <>
Rational random_coeff<Rational>() {
    return random_rational();
}
template <>
DualNumber random_coeff<DualNumber>() {
    return DualNumber(random_rational(), random_rational());
}
template <>
BiDualNumber random_coeff<BiDualNumber>() {
    return BiDualNumber(random_rational(), random_rational(), random_rational(),
                        random_rational());
}

Profile random_profile() {
    std::uniform_int_distribution<int> pick(0, 2);
    switch (pick(rng)) {
        case 0: return Profile({{Var::q, 0, 6}});
        case 1: return Profile({{Var::p, 0, 4}, {Var::t, 0, 3}});
        default: return Profile({{Var::q, 0, 4}, {Var::t, 0, 2}});
    }
}

/// Random series with unit constant term and non-negative support; the
/// admissible inputs of log and invert.
template <Ring R>
MultiSeries<R> random_unit_series_in(const Profile& prof) {
    MultiSeries<R> f = MultiSeries<R>::constant(prof, R(1L));
    std::uniform_int_distribution<int> nterms(1, 6);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        ExpVec e(prof.size());
        bool zero = true;
        for (std::size_t j = 0; j < prof.size(); ++j) {
            std::uniform_int_distribution<int> d(0, prof[j].max_deg);
            e[j] = d(rng);
            if (e[j] != 0) zero = false;
        }
        if (zero) continue;
        f.add_to(e, random_coeff<R>());
    }
    return f;
}

template <Ring R>
MultiSeries<R> random_unit_series() {
    return random_unit_series_in<R>(random_profile());
}

/// Random series with zero constant term for exp.
template <Ring R>
MultiSeries<R> random_nilpotent_series() {
    MultiSeries<R> f = random_unit_series<R>();
    return f - MultiSeries<R>::constant(f.profile(), R(1L));
}

} // namespace

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(Profile({{Var::q, -2, 3}}), SeriesDomainError);
    CHECK_THROWS_AS(Profile({{Var::q, 2, 1}}), SeriesDomainError);
    CHECK_THROWS_AS(Profile({{Var::q, 0, 3}, {Var::q, 0, 3}}), SeriesDomainError);
    CHECK_NOTHROW(Profile({{Var::p, -10, 5}, {Var::t, -1, 3}}));
}

TEST_CASE("add and mul basics") {
    Profile P({{Var::q, 0, 4}});
    auto one = MultiSeries<Rational>::constant(P, 1);
    auto q1 = MultiSeries<Rational>::monomial(P, P.exps({{Var::q, 1}}), 1);

    auto a = one + q1;       // 1+q
    auto b = one - q1;       // 1-q
    auto prod = a * b;       // 1-q^2
    CHECK(prod.coeff({{Var::q, 0}}) == Rational(1));
    CHECK(prod.coeff({{Var::q, 1}}) == Rational(0));
    CHECK(prod.coeff({{Var::q, 2}}) == Rational(-1));

    auto neg = -prod;
    CHECK(neg.coeff({{Var::q, 2}}) == Rational(1));
}

TEST_CASE("mul with incompatible variables fails") {
    Profile P({{Var::q, 0, 4}});
    Profile Q({{Var::t, 0, 4}});
    auto a = MultiSeries<Rational>::constant(P, 1);
    auto b = MultiSeries<Rational>::constant(Q, 1);
    CHECK_THROWS_AS(a * b, SeriesDomainError);
}

TEST_CASE("laurent index shift") {
    Profile W({{Var::p, -1, 4}});
    MultiSeries<Rational> A(W);
    for (int j = 1; j <= 4; ++j)
        A.add_to(W.exps({{Var::p, j}}), Rational(j));
    auto B = MultiSeries<Rational>::monomial(W, W.exps({{Var::p, -1}}), 1);
    auto shifted = (A * B).restrict(Profile({{Var::p, -1, 3}}));
    CHECK(shifted.coeff({{Var::p, -1}}) == Rational(0));
    CHECK(shifted.coeff({{Var::p, 0}}) == Rational(1));
    CHECK(shifted.coeff({{Var::p, 1}}) == Rational(2));
    CHECK(shifted.coeff({{Var::p, 2}}) == Rational(3));
    CHECK(shifted.coeff({{Var::p, 3}}) == Rational(4));
}

TEST_CASE("dual coefficient series: eps square vanishes") {
    Profile P({{Var::q, 0, 3}});
    auto one = MultiSeries<DualNumber>::constant(P, DualNumber(1));
    auto eq = MultiSeries<DualNumber>::monomial(P, P.exps({{Var::q, 1}}),
                                                DualNumber::eps_unit());
    auto f = one + eq;
    auto sq = f * f;
    CHECK(sq.coeff({{Var::q, 1}}) == DualNumber(Rational(0), Rational(2)));
    CHECK(sq.coeff({{Var::q, 2}}) == DualNumber::zero());
}

TEST_CASE("coeff outside the box errors, never zero") {
    Profile P({{Var::t, 0, 3}});
    auto f = MultiSeries<Rational>::constant(P, 1) +
             MultiSeries<Rational>::monomial(P, P.exps({{Var::t, 1}}), 24);
    CHECK(f.coeff({{Var::t, 1}}) == Rational(24));
    CHECK(f.coeff({{Var::t, 3}}) == Rational(0));
    CHECK_THROWS_AS(f.coeff({{Var::t, 5}}), TruncationError);
    CHECK_THROWS_WITH_AS(f.coeff({{Var::t, 5}}),
                         doctest::Contains("beyond truncation"), TruncationError);
}

TEST_CASE("invert: geometric series") {
    Profile P({{Var::q, 0, 3}});
    auto one = MultiSeries<Rational>::constant(P, 1);
    auto f = one - MultiSeries<Rational>::monomial(P, P.exps({{Var::q, 1}}), 1);
    auto g = invert(f);
    for (int j = 0; j <= 3; ++j) CHECK(g.coeff({{Var::q, j}}) == Rational(1));
    CHECK(f * g == one);
}

TEST_CASE("invert: monomial") {
    Profile P({{Var::p, -2, 2}, {Var::t, -1, 2}});
    auto f = MultiSeries<Rational>::monomial(P, P.exps({{Var::p, 1}, {Var::t, 1}}), 1);
    auto g = invert(f);
    CHECK(g.coeff({{Var::p, -1}, {Var::t, -1}}) == Rational(1));
    CHECK(g.terms().size() == 1);
}

TEST_CASE("invert: squared geometric") {
    Profile P({{Var::q, 0, 4}});
    auto one = MultiSeries<Rational>::constant(P, 1);
    MultiSeries<Rational> f(P);
    f.add_to(P.exps({}), 1);
    f.add_to(P.exps({{Var::q, 1}}), -2);
    f.add_to(P.exps({{Var::q, 2}}), 1);
    auto g = invert(f);
    for (int j = 0; j <= 4; ++j) CHECK(g.coeff({{Var::q, j}}) == Rational(j + 1));
}

TEST_CASE("invert: rejects non-monomial lowest part") {
    Profile P({{Var::q, 0, 3}, {Var::t, 0, 3}});
    MultiSeries<Rational> f(P);
    f.add_to(P.exps({{Var::q, 1}}), 1);
    f.add_to(P.exps({{Var::t, 1}}), 1);
    CHECK_THROWS_AS(invert(f), SeriesDomainError);
    CHECK_THROWS_AS(invert(MultiSeries<Rational>(P)), SeriesDomainError);
}

TEST_CASE("invert: one-sided laurent expansion picks the region") {
    // 1/(p + p^{-1}) expanded with p^{-1} as the leading monomial:
    // p (1 - p^2 + p^4 - ...)
    Profile P({{Var::p, -2, 5}});
    MultiSeries<Rational> f(P);
    f.add_to(P.exps({{Var::p, 1}}), 1);
    f.add_to(P.exps({{Var::p, -1}}), 1);
    auto g = invert(f);
    CHECK(g.coeff({{Var::p, 1}}) == Rational(1));
    CHECK(g.coeff({{Var::p, 3}}) == Rational(-1));
    CHECK(g.coeff({{Var::p, 5}}) == Rational(1));
    CHECK(g.coeff({{Var::p, 0}}) == Rational(0));
    CHECK(g.coeff({{Var::p, -1}}) == Rational(0));
}

TEST_CASE("invert: non-unit leading coefficient over dual numbers") {
    Profile P({{Var::q, 0, 3}});
    MultiSeries<DualNumber> f(P);
    f.add_to(P.exps({}), DualNumber::eps_unit());
    CHECK_THROWS_AS(invert(f), SeriesDomainError);
}

TEST_CASE("log and exp basics") {
    Profile P({{Var::q, 0, 3}});
    auto one = MultiSeries<Rational>::constant(P, 1);
    auto q1 = MultiSeries<Rational>::monomial(P, P.exps({{Var::q, 1}}), 1);

    auto lg = log_series(invert(one - q1)); // log 1/(1-q)
    CHECK(lg.coeff({{Var::q, 1}}) == Rational(1));
    CHECK(lg.coeff({{Var::q, 2}}) == Rational(1, 2));
    CHECK(lg.coeff({{Var::q, 3}}) == Rational(1, 3));

    auto ex = exp_series(q1);
    CHECK(ex.coeff({{Var::q, 0}}) == Rational(1));
    CHECK(ex.coeff({{Var::q, 1}}) == Rational(1));
    CHECK(ex.coeff({{Var::q, 2}}) == Rational(1, 2));
    CHECK(ex.coeff({{Var::q, 3}}) == Rational(1, 6));

    CHECK_THROWS_AS(log_series(q1), SeriesDomainError);
    CHECK_THROWS_AS(exp_series(one), SeriesDomainError);
}

TEST_CASE("log of a product expands termwise") {
    Profile P({{Var::q, 0, 4}});
    auto one = MultiSeries<Rational>::constant(P, 1);
    auto q1 = MultiSeries<Rational>::monomial(P, P.exps({{Var::q, 1}}), 1);
    auto q2 = MultiSeries<Rational>::monomial(P, P.exps({{Var::q, 2}}), 1);
    auto lg = log_series((one + q1) * (one + q2));
    CHECK(lg.coeff({{Var::q, 1}}) == Rational(1));
    CHECK(lg.coeff({{Var::q, 2}}) == Rational(1, 2)); // -1/2 + 1
    CHECK(lg.coeff({{Var::q, 3}}) == Rational(1, 3));
    CHECK(lg.coeff({{Var::q, 4}}) == Rational(-3, 4));
}

TEST_CASE("pow_ring examples") {
    Profile P({{Var::q, 0, 2}});
    auto one = MultiSeries<Rational>::constant(P, 1);
    auto f = one - MultiSeries<Rational>::monomial(P, P.exps({{Var::q, 1}}), 1);

    auto g = pow_ring(f, Rational(-24));
    CHECK(g.coeff({{Var::q, 0}}) == Rational(1));
    CHECK(g.coeff({{Var::q, 1}}) == Rational(24));
    CHECK(g.coeff({{Var::q, 2}}) == Rational(300));

    auto cubed = pow_ring(invert(f), Rational(3));
    CHECK(cubed.coeff({{Var::q, 1}}) == Rational(3));
    CHECK(cubed.coeff({{Var::q, 2}}) == Rational(6));

    // (1-q)^eps = 1 + eps log(1-q)
    auto fd = f.map_coefficients<DualNumber>([](const Rational& c) { return DualNumber(c); });
    auto h = pow_ring(fd, DualNumber::eps_unit());
    CHECK(h.coeff({{Var::q, 0}}) == DualNumber(1));
    CHECK(h.coeff({{Var::q, 1}}) == DualNumber(Rational(0), Rational(-1)));
    CHECK(h.coeff({{Var::q, 2}}) == DualNumber(Rational(0), Rational(-1, 2)));

    CHECK_THROWS_AS(pow_ring(g - one, Rational(2)), SeriesDomainError);
}

TEST_CASE("product_eval examples") {
    // prod_{m=1,2} (1-t^m)^{-24} to t^2
    Profile T({{Var::t, 0, 2}});
    std::vector<Factor<Rational>> fs;
    for (int m = 1; m <= 2; ++m) fs.push_back({Rational(1), T.exps({{Var::t, m}}), -24});
    auto s = product_eval(fs, T);
    CHECK(s.coeff({{Var::t, 0}}) == Rational(1));
    CHECK(s.coeff({{Var::t, 1}}) == Rational(24));
    CHECK(s.coeff({{Var::t, 2}}) == Rational(324));

    // prod (1-q^m)^{-m} to q^3: plane-partition counts
    Profile Q({{Var::q, 0, 3}});
    std::vector<Factor<Rational>> gs;
    for (int m = 1; m <= 3; ++m) gs.push_back({Rational(1), Q.exps({{Var::q, m}}), -m});
    auto mac = product_eval(gs, Q);
    CHECK(mac.coeff({{Var::q, 0}}) == Rational(1));
    CHECK(mac.coeff({{Var::q, 1}}) == Rational(1));
    CHECK(mac.coeff({{Var::q, 2}}) == Rational(3));
    CHECK(mac.coeff({{Var::q, 3}}) == Rational(6));

    // empty stream
    auto empty = product_eval(std::vector<Factor<Rational>>{}, Q);
    CHECK(empty == MultiSeries<Rational>::constant(Q, 1));
}

TEST_CASE("product_eval rejects non-terminating factors") {
    Profile P({{Var::p, -2, 2}, {Var::t, 0, 2}});
    // (1 - p^{-1})^{-1} has a non-positive grading and is not a prefactor
    std::vector<Factor<Rational>> fs = {{Rational(1), P.exps({{Var::p, -1}}), -1}};
    CHECK_THROWS_AS(product_eval(fs, P), SeriesDomainError);
    // flagged prefactor with positive power is fine: polynomial
    std::vector<Factor<Rational>> ok = {{Rational(1), P.exps({{Var::p, -1}}), 2, true}};
    auto s = product_eval(ok, P);
    CHECK(s.coeff({{Var::p, -2}}) == Rational(1));
    CHECK(s.coeff({{Var::p, -1}}) == Rational(-2));
    // stream with decreasing grading is rejected
    std::vector<Factor<Rational>> bad = {{Rational(1), P.exps({{Var::t, 2}}), 1},
                                         {Rational(1), P.exps({{Var::t, 1}}), 1}};
    CHECK_THROWS_AS(product_eval(bad, P), SeriesDomainError);
}

TEST_CASE("factor coefficients: signed monomials") {
    // prod_m (1 - (-1)^m q^m)^m, the building block of M(-q) manipulations
    Profile Q({{Var::q, 0, 4}});
    std::vector<Factor<Rational>> fs;
    for (int m = 1; m <= 4; ++m)
        fs.push_back({Rational(m % 2 == 1 ? -1 : 1), Q.exps({{Var::q, m}}), m});
    auto s = product_eval(fs, Q);
    // (1+q)(1-q^2)^2(1+q^3)^3(1-q^4)^4 = 1 + q - 2q^2 + q^3 + ...
    CHECK(s.coeff({{Var::q, 1}}) == Rational(1));
    CHECK(s.coeff({{Var::q, 2}}) == Rational(-2));
}

template <Ring R>
static void check_exp_log_roundtrip() {
    for (int i = 0; i < 100; ++i) {
        auto f = random_unit_series<R>();
        CHECK(exp_series(log_series(f)) == f);
        auto g = random_nilpotent_series<R>();
        CHECK(log_series(exp_series(g)) == g);
    }
}

TEST_CASE("exp/log inverse pair over all coefficient rings") {
    check_exp_log_roundtrip<Rational>();
    check_exp_log_roundtrip<DualNumber>();
    check_exp_log_roundtrip<BiDualNumber>();
}

template <Ring R>
static void check_invert_property() {
    for (int i = 0; i < 100; ++i) {
        auto f = random_unit_series<R>();
        auto one = MultiSeries<R>::constant(f.profile(), R(1L));
        CHECK(f * invert(f) == one);
    }
}

TEST_CASE("invert is a right inverse over all coefficient rings") {
    check_invert_property<Rational>();
    check_invert_property<DualNumber>();
    check_invert_property<BiDualNumber>();
}

TEST_CASE("mul is associative and commutative in a common box") {
    for (int i = 0; i < 100; ++i) {
        auto a = random_unit_series<Rational>();
        Profile prof = a.profile();
        auto make = [&]() {
            MultiSeries<Rational> s(prof);
            std::uniform_int_distribution<int> nterms(0, 5);
            int n = nterms(rng);
            for (int j = 0; j < n; ++j) {
                ExpVec e(prof.size());
                for (std::size_t k = 0; k < prof.size(); ++k) {
                    std::uniform_int_distribution<int> d(0, prof[k].max_deg);
                    e[k] = d(rng);
                }
                s.add_to(e, random_rational());
            }
            return s;
        };
        auto b = make(), c = make();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

template <Ring R>
static void check_power_structure_axioms() {
    for (int i = 0; i < 100; ++i) {
        auto f = random_unit_series<R>();
        auto g = random_unit_series_in<R>(f.profile());
        R n = random_coeff<R>();
        R m = random_coeff<R>();
        auto one = MultiSeries<R>::constant(f.profile(), R(1L));

        CHECK(pow_ring(f, R(0L)) == one);                             // f^0 = 1
        CHECK(pow_ring(f, R(1L)) == f);                               // f^1 = f
        CHECK(pow_ring(f, n) * pow_ring(g, n) == pow_ring(f * g, n)); // f^n g^n = (fg)^n
        CHECK(pow_ring(f, n + m) == pow_ring(f, n) * pow_ring(f, m)); // f^{n+m}
        CHECK(pow_ring(pow_ring(f, n), m) == pow_ring(f, n * m));     // (f^n)^m
    }
}

TEST_CASE("power structure axioms over Q and Q[eps]") {
    check_power_structure_axioms<Rational>();
    check_power_structure_axioms<DualNumber>();
}

TEST_CASE("integer pow_ring agrees with repeated multiplication") {
    for (int i = 0; i < 50; ++i) {
        auto f = random_unit_series<Rational>();
        auto sq = f * f;
        CHECK(pow_ring(f, Rational(2)) == sq);
        CHECK(pow_ring(f, Rational(3)) == sq * f);
    }
}

TEST_CASE("series equality compares the intersection box") {
    Profile A({{Var::q, 0, 3}});
    Profile B({{Var::q, 0, 5}});
    auto a = MultiSeries<Rational>::constant(A, 1);
    auto b = MultiSeries<Rational>::constant(B, 1);
    CHECK(a == b);
    auto b2 = b + MultiSeries<Rational>::monomial(B, B.exps({{Var::q, 5}}), 7);
    CHECK(a == b2); // differs only beyond a's box
    auto b3 = b + MultiSeries<Rational>::monomial(B, B.exps({{Var::q, 2}}), 7);
    CHECK(a != b3);
}
