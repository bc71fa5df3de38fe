#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecount/igusa.hpp"
#include "curvecount/invariants.hpp"
#include "curvecount/numtheory.hpp"

using namespace curvecount;

namespace {

const MRowTable& shared_m() {
    static MRowTable m = m_direct(5, -10, 10);
    return m;
}

const EulerTable& shared_a() {
    static EulerTable a = euler_hilb_k3(6);
    return a;
}

} // namespace

TEST_CASE("fiber-class invariants: degree-0 anchors") {
    const auto& m = shared_m();
    CHECK(dt_k3xe_0d(1, 0, Route::closed_formula, m) == Rational(24));
    CHECK(dt_k3xe_0d(2, 0, Route::closed_formula, m) == Rational(-60));
    CHECK(dt_k3xe_0d(3, 0, Route::closed_formula, m) == Rational(80));
    CHECK(dt_k3xe_0d(4, 0, Route::closed_formula, m) == Rational(-126));
    CHECK(dt_k3xe_0d(1, 1, Route::closed_formula, m) == Rational(600));
    CHECK_THROWS_AS(dt_k3xe_0d(0, 0, Route::closed_formula, m), SeriesDomainError);
    CHECK_THROWS_AS(dt_k3xe_0d(1, 0, Route::wall_crossing, m), SeriesDomainError);
}

TEST_CASE("fiber-class invariants: the two local routes agree") {
    const auto& m = shared_m();
    for (long n = 1; n <= 10; ++n)
        for (int d = 0; d <= 5; ++d)
            CHECK(dt_k3xe_0d(n, d, Route::closed_formula, m) ==
                  dt_k3xe_0d(n, d, Route::product_log, m));
}

TEST_CASE("divisor-sum reading: k | n vs k | gcd(n,d)") {
    const auto& m = shared_m();
    // (2, 1): the full divisor sum picks up m(1,1)/2, the gcd variant does not
    Rational full = dt_k3xe_0d(2, 1, Route::closed_formula, m);
    Rational restricted = dt_k3xe_0d_gcd_variant(2, 1, m);
    CHECK(full == Rational(m.at(1, 2)) + Rational(1, 2) * Rational(m.at(1, 1)));
    CHECK(restricted == Rational(m.at(1, 2)));
    CHECK(full != restricted);
    // they coincide whenever d is a multiple of every divisor of n, e.g. d = 0
    for (long n = 1; n <= 8; ++n)
        CHECK(dt_k3xe_0d(n, 0, Route::closed_formula, m) ==
              dt_k3xe_0d_gcd_variant(n, 0, m));
}

TEST_CASE("multiple-cover evaluator at beta = 0 reproduces the fiber formula") {
    IgusaConfig cfg{1, 5, -10, 10};
    QuadraticCoeffTable c = c_table(4 * cfg.h_max * cfg.d_max);
    MTable mt = igusa_m_table(cfg, c);
    const auto& m = shared_m();
    for (long n = 1; n <= 8; ++n)
        for (int d = 0; d <= 5; ++d) {
            K3xEClass cls{n, true, 0, 1, d};
            CHECK(mc_k3xe(cls, mt) == dt_k3xe_0d(n, d, Route::closed_formula, m));
        }
}

TEST_CASE("multiple-cover evaluator: primitive and (-2)-classes") {
    IgusaConfig cfg{2, 2, -6, 6};
    QuadraticCoeffTable c = c_table(4 * cfg.h_max * cfg.d_max);
    MTable mt = igusa_m_table(cfg, c);

    // primitive beta: single k = 1 term, up to sign a table entry
    K3xEClass prim{3, false, 2, 1, 1}; // beta^2 = 2, h = 2
    CHECK(mc_k3xe(prim, mt) == -Rational(mt.at(2, 1, 3)));

    // beta^2 = -2, d = 0, n = 1: the value is 1
    K3xEClass neg2{1, false, -2, 1, 0};
    CHECK(mc_k3xe(neg2, mt) == Rational(1));

    // n = 0 with nonzero beta is admissible
    K3xEClass nzero{0, false, 2, 1, 1};
    CHECK(mc_k3xe(nzero, mt) == Rational(mt.at(2, 1, 0)));

    CHECK_THROWS_AS(mc_k3xe(K3xEClass{0, true, 0, 1, 2}, mt), SeriesDomainError);
    CHECK_THROWS_AS(mc_k3xe(K3xEClass{1, false, 3, 1, 0}, mt), SeriesDomainError);
    CHECK_THROWS_AS(mc_k3xe(K3xEClass{1, false, 2, 2, 0}, mt), SeriesDomainError);
}

TEST_CASE("imprimitive class: divisor sum over the divisibility") {
    IgusaConfig cfg{5, 2, -8, 8};
    QuadraticCoeffTable c = c_table(4 * cfg.h_max * cfg.d_max);
    MTable mt = igusa_m_table(cfg, c);
    // beta = 2 beta_0 with beta_0^2 = 2: beta^2 = 8, divisibility 2
    K3xEClass cls{4, false, 8, 2, 1};
    Rational expected = Rational(mt.at(5, 1, 4))                 // k = 1: h = 8/2 + 1
                        + Rational(1, 2) * Rational(mt.at(2, 1, 2)); // k = 2: h = 8/8 + 1
    CHECK(mc_k3xe(cls, mt) == expected);
}

TEST_CASE("abelian threefold: closed formula anchors") {
    for (long d = 0; d <= 6; ++d) CHECK(dt_abelian_closed(1, d) == Rational(1));
    CHECK(dt_abelian_closed(2, 2) == Rational(-5, 2));
    CHECK(dt_abelian_closed(3, 3) == Rational(10, 3));
    CHECK(dt_abelian_closed(3, 0) == Rational(10, 3));
    CHECK_THROWS_AS(dt_abelian_closed(0, 1), SeriesDomainError);
}

TEST_CASE("n_factor") {
    CHECK(n_factor(1, 1, 1, 1) == 1);
    CHECK(n_factor(2, 2, 2, 2) == 5);
    for (long k = 1; k <= 6; ++k)
        for (long d = 0; d <= 6; ++d) {
            Integer expected = 0;
            long g = gcd_nonneg(k, d);
            for (long delta : divisors(g)) expected += Integer(delta * delta);
            CHECK(n_factor(0, 0, d, k) == expected);
        }
    // non-integral bracket entry: d1 d2 / k = 1/2
    CHECK(n_factor(1, 1, 2, 2) == 0);
}

TEST_CASE("abelian multiple-cover sum agrees with the closed formula") {
    QuadraticCoeffTable a = a_table(24);
    for (long n = 1; n <= 8; ++n)
        for (long d = 0; d <= 6; ++d) {
            AbelianClass cls{n, 0, 0, d};
            CHECK(dt_abelian_mc(cls, a) == dt_abelian_closed(n, d));
        }
    // the sum collapses to the single term k = n whenever n | gcd set
    for (long n = 1; n <= 6; ++n) {
        long d = 2 * n;
        AbelianClass cls{n, 0, 0, d};
        Rational collapsed = Rational(n % 2 == 0 ? 1 : -1) * Rational(n_factor(0, 0, d, n)) *
                             Rational(a.at(-1)) / Rational(Integer(n));
        CHECK(dt_abelian_mc(cls, a) == collapsed);
    }
}

TEST_CASE("abelian multiple-cover: general type") {
    QuadraticCoeffTable a = a_table(24);
    AbelianClass c111{1, 1, 1, 1};
    CHECK(dt_abelian_mc(c111, a) == Rational(8)); // -a(3)
    AbelianClass inadmissible{0, 0, 0, 5};
    CHECK_THROWS_AS(dt_abelian_mc(inadmissible, a), SeriesDomainError);
    AbelianClass n0ok{0, 0, 2, 3};
    CHECK_NOTHROW(dt_abelian_mc(n0ok, a));
}

TEST_CASE("N^red and L tables") {
    CHECK(n_red_k3xe(1, 0) == Rational(24));
    CHECK(n_red_k3xe(2, 2) == Rational(30));
    CHECK(n_red_k3xe(3, 1) == Rational(8, 3));
    const auto& a = shared_a();
    CHECK(l_k3xe(0, 1, a) == Rational(24));
    for (int d = 0; d <= 4; ++d) {
        CHECK(l_k3xe(1, d, a) == Rational(0));
        CHECK(l_k3xe(-2, d, a) == Rational(0));
        CHECK(l_red_k3xe(3, d) == Rational(0));
    }
}

TEST_CASE("stable pairs: fiber classes of degree zero vanish") {
    const auto& m = shared_m();
    const auto& a = shared_a();
    for (long n = 1; n <= 8; ++n) CHECK(pt_k3xe_0d(n, 0, m, a) == Rational(0));
}

TEST_CASE("DT/PT series identity") {
    const auto& m = shared_m();
    const auto& a = shared_a();
    DtPtReport rep = dtpt_verify_k3xe(4, 8, m, a);
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 5);
}

TEST_CASE("abelian DT/PT records") {
    auto r1 = dtpt_abelian(AbelianClass{1, 0, 0, 1});
    CHECK(r1.equal);
    CHECK(r1.dt == Rational(1));
    auto r2 = dtpt_abelian(AbelianClass{2, 0, 0, 2});
    CHECK(r2.equal);
    CHECK(r2.dt == Rational(-5, 2));
    auto r3 = dtpt_abelian(AbelianClass{3, 0, 0, 0});
    CHECK(r3.equal);
    CHECK(r3.dt == Rational(10, 3));
    CHECK_THROWS_AS(dtpt_abelian(AbelianClass{1, 1, 1, 0}), SeriesDomainError);
}

TEST_CASE("degree-0 ratio between the two threefolds") {
    const auto& m = shared_m();
    for (long n = 1; n <= 10; ++n)
        CHECK(dt_k3xe_0d(n, 0, Route::closed_formula, m) ==
              Rational(24) * dt_abelian_closed(n, 0));
}
