#include "curvecount/invariants.hpp"

#include "curvecount/numtheory.hpp"

namespace curvecount {

std::string route_name(Route r) {
    switch (r) {
        case Route::closed_formula: return "closed_formula";
        case Route::multiple_cover: return "multiple_cover";
        case Route::wall_crossing: return "wall_crossing";
        case Route::product_log: return "product_log";
    }
    return "?";
}

Route route_from_name(const std::string& s) {
    if (s == "closed_formula") return Route::closed_formula;
    if (s == "multiple_cover") return Route::multiple_cover;
    if (s == "wall_crossing") return Route::wall_crossing;
    if (s == "product_log") return Route::product_log;
    throw SeriesDomainError("unknown route '" + s + "'");
}

void K3xEClass::validate() const {
    if (d < 0) throw SeriesDomainError("k3xe class: d must be >= 0");
    if (beta_zero) {
        if (n == 0)
            throw SeriesDomainError("k3xe class: (n, beta) = (0, 0) has no reduced invariant");
        return;
    }
    if (beta_div < 1) throw SeriesDomainError("k3xe class: divisibility must be >= 1");
    if (beta_sq % 2 != 0) throw SeriesDomainError("k3xe class: beta^2 must be even");
    if (beta_sq < -2) throw SeriesDomainError("k3xe class: beta^2 must be >= -2");
    long div2 = beta_div * beta_div;
    if (beta_sq % div2 != 0 || ((beta_sq / div2) % 2 != 0))
        throw SeriesDomainError(
            "k3xe class: beta^2 must be divisibility^2 times an even primitive square");
}

void AbelianClass::validate() const {
    if (d1 < 0 || d2 < 0 || d3 < 0)
        throw SeriesDomainError("abelian class: type entries must be >= 0");
    int positive = (d1 > 0) + (d2 > 0) + (d3 > 0);
    if (n == 0 && positive < 2)
        throw SeriesDomainError(
            "abelian class: needs n != 0 or at least two positive type entries");
}

bool AbelianClass::is_degenerate_type() const {
    return (d1 > 0) + (d2 > 0) + (d3 > 0) <= 1;
}

long AbelianClass::degenerate_d() const {
    if (!is_degenerate_type())
        throw SeriesDomainError("abelian class: type is not (0,0,d) up to permutation");
    return d1 + d2 + d3;
}

Rational dt_k3xe_0d(long n, int d, Route route, const MRowTable& m) {
    if (n < 1) throw SeriesDomainError("dt_k3xe_0d: n must be >= 1");
    if (d < 0) throw SeriesDomainError("dt_k3xe_0d: d must be >= 0");
    Rational sign(n % 2 == 0 ? 1 : -1);
    switch (route) {
        case Route::closed_formula: {
            Rational acc;
            for (long k : divisors(n))
                acc += Rational(m.at(d, n / k)) / Rational(Integer(k));
            return sign * acc;
        }
        case Route::product_log: {
            Profile box({{Var::p, 0, static_cast<int>(n)}});
            std::vector<Factor<Rational>> fs;
            for (long l = 1; l <= n; ++l)
                fs.push_back({Rational(1), box.exps({{Var::p, static_cast<int>(l)}}),
                              -m.at(d, l)});
            RSeries lg = log_series(product_eval(fs, box));
            return sign * lg.coeff({{Var::p, static_cast<int>(n)}});
        }
        default:
            throw SeriesDomainError("dt_k3xe_0d: route " + route_name(route) +
                                    " is computed by the wall-crossing module");
    }
}

Rational dt_k3xe_0d_gcd_variant(long n, int d, const MRowTable& m) {
    if (n < 1) throw SeriesDomainError("dt_k3xe_0d_gcd_variant: n must be >= 1");
    Rational acc;
    long g = gcd_nonneg(n, d);
    for (long k : divisors(g))
        acc += Rational(m.at(d, n / k)) / Rational(Integer(k));
    return Rational(n % 2 == 0 ? 1 : -1) * acc;
}

Rational mc_k3xe(const K3xEClass& c, const MTable& m) {
    c.validate();
    long divisibility = c.beta_zero ? 0 : c.beta_div;
    long g = gcd_nonneg(c.n, divisibility);
    if (g == 0)
        throw SeriesDomainError("mc_k3xe: (n, beta) = (0, 0) has no reduced invariant");
    Rational acc;
    for (long k : divisors(g)) {
        long h = c.beta_zero ? 1 : c.beta_sq / (2 * k * k) + 1;
        if (h < 0)
            throw SeriesDomainError("mc_k3xe: negative h index");
        acc += Rational(m.at(static_cast<int>(h), c.d, c.n / k)) / Rational(Integer(k));
    }
    return Rational(c.n % 2 == 0 ? 1 : -1) * acc;
}

Rational dt_abelian_closed(long n, long d) {
    if (n < 1) throw SeriesDomainError("dt_abelian_closed: n must be >= 1");
    if (d < 0) throw SeriesDomainError("dt_abelian_closed: d must be >= 0");
    long g = gcd_nonneg(n, d);
    return Rational(n % 2 == 1 ? 1 : -1) * Rational(sigma(2, g)) / Rational(Integer(n));
}

Integer n_factor(long d1, long d2, long d3, long k) {
    if (k < 1) throw SeriesDomainError("n_factor: k must be >= 1");
    if ((d1 * d2) % k != 0 || (d1 * d3) % k != 0 || (d2 * d3) % k != 0 ||
        (d1 * d2 * d3) % (k * k) != 0)
        return 0;
    long g = gcd_list({k, d1, d2, d3, d1 * d2 / k, d1 * d3 / k, d2 * d3 / k,
                       d1 * d2 * d3 / (k * k)});
    Integer acc = 0;
    for (long delta : divisors(g)) acc += Integer(delta) * Integer(delta);
    return acc;
}

Rational dt_abelian_mc(const AbelianClass& c, const QuadraticCoeffTable& a) {
    c.validate();
    long products_gcd = gcd_list({c.d1 * c.d2, c.d1 * c.d3, c.d2 * c.d3});
    long g = gcd_nonneg(c.n, products_gcd);
    if (g == 0)
        throw SeriesDomainError("dt_abelian_mc: degenerate class with n = 0");
    long D = c.d1 * c.d2 * c.d3;
    Rational acc;
    for (long k : divisors(g)) {
        if (D % (k * k) != 0) continue;
        long arg = (4 * D - c.n * c.n) / (k * k);
        acc += Rational(n_factor(c.d1, c.d2, c.d3, k)) * Rational(a.at(arg)) /
               Rational(Integer(k));
    }
    return Rational(c.n % 2 == 0 ? 1 : -1) * acc;
}

Rational n_red_k3xe(long n, long d) {
    if (n < 1) throw SeriesDomainError("n_red_k3xe: n must be >= 1");
    long g = gcd_nonneg(n, d);
    return Rational(24) * Rational(sigma(2, g)) / Rational(Integer(n) * Integer(n));
}

Rational l_k3xe(long n, int d, const EulerTable& a) {
    return n == 0 ? Rational(a.at(d)) : Rational(0);
}

Rational l_red_k3xe(long, int) { return Rational(0); }

namespace {

/// [q^n] log prod_{l>=1} (1 - (-q)^l)^l = -(-1)^n sigma_2(n)/n, computed on
/// the series route so the DT/PT relation exercises the engine.
Rational log_mneg_coeff(long n, int n_max) {
    Profile box({{Var::q, 0, n_max}});
    std::vector<Factor<Rational>> fs;
    for (int l = 1; l <= n_max; ++l)
        fs.push_back({Rational(l % 2 == 1 ? -1 : 1), box.exps({{Var::q, l}}), l});
    RSeries lg = log_series(product_eval(fs, box));
    return lg.coeff({{Var::q, static_cast<int>(n)}});
}

} // namespace

Rational pt_k3xe_0d(long n, int d, const MRowTable& m, const EulerTable& a) {
    if (n < 1) throw SeriesDomainError("pt_k3xe_0d: n must be >= 1");
    Rational dt = dt_k3xe_0d(n, d, Route::closed_formula, m);
    return dt - Rational(24) * log_mneg_coeff(n, static_cast<int>(n)) * Rational(a.at(d));
}

DtPtReport dtpt_verify_k3xe(int d_max, int n_max, const MRowTable& m, const EulerTable& a) {
    DtPtReport report;
    Profile box({{Var::q, 0, n_max}});

    // M(-q) = prod (1 - (-q)^l)^{-l}
    std::vector<Factor<Rational>> fs;
    for (int l = 1; l <= n_max; ++l)
        fs.push_back({Rational(l % 2 == 1 ? -1 : 1), box.exps({{Var::q, l}}), -l});
    RSeries macneg = product_eval(fs, box);

    for (int d = 0; d <= d_max; ++d) {
        RSeries dt_sum(box), pt_sum(box);
        for (long n = 1; n <= n_max; ++n) {
            dt_sum.add_to(box.exps({{Var::q, static_cast<int>(n)}}),
                          dt_k3xe_0d(n, d, Route::closed_formula, m));
            pt_sum.add_to(box.exps({{Var::q, static_cast<int>(n)}}), pt_k3xe_0d(n, d, m, a));
        }
        RSeries lhs = exp_series(dt_sum);
        RSeries rhs = pow_ring(macneg, Rational(-24) * Rational(a.at(d))) * exp_series(pt_sum);
        bool ok = (lhs == rhs);
        report.rows.push_back({d, ok});
        report.pass = report.pass && ok;
    }
    return report;
}

AbelianDtPtRecord dtpt_abelian(const AbelianClass& c) {
    c.validate();
    long d = c.degenerate_d();
    if (c.n < 1) throw SeriesDomainError("dtpt_abelian: n must be >= 1");
    Rational dt = dt_abelian_closed(c.n, d);
    // The correction series multiplies ordinary stable-pairs invariants of
    // the classes (n', (0,d)); those all vanish, leaving DT = PT.
    Rational correction(0);
    Rational pt = dt - correction;
    return {dt, pt, dt == pt};
}

} // namespace curvecount
