#include "curvecount/gw.hpp"

#include "curvecount/numtheory.hpp"

namespace curvecount {

RSeries eisenstein(unsigned k, int t_max) {
    if (k % 2 != 0 || k < 2) throw SeriesDomainError("eisenstein: weight must be even >= 2");
    Profile box({{Var::t, 0, t_max}});
    RSeries s(box);
    Rational kfact(factorial(k));
    s.add_to(box.exps({}), -bernoulli(k) / (Rational(Integer(k)) * kfact));
    for (int n = 1; n <= t_max; ++n)
        s.add_to(box.exps({{Var::t, n}}), Rational(2) * Rational(sigma(k - 1, n)) / kfact);
    return s;
}

GWPotential gw_potential(unsigned g, int d_max) {
    if (g < 2) throw SeriesDomainError("gw_potential: genus must be >= 2");
    Rational prefactor = Rational(24) * Rational(1, 2 * static_cast<long>(g) - 2) *
                         Rational(g % 2 == 0 ? 1 : -1) * bernoulli(2 * g - 2) *
                         Rational(binomial(2 * g, 2));
    RSeries f = prefactor * (eta24_inverse(d_max) * eisenstein(2 * g, d_max));
    return {g, f};
}

std::vector<Rational> renorm_remainder(int d, const MRowTable& m, const EulerTable& a) {
    if (d < 0) throw SeriesDomainError("renorm_remainder: d must be >= 0");
    Rational ad(a.at(d));
    std::vector<Rational> r;
    r.reserve(d);
    for (long l = 1; l <= d; ++l)
        r.push_back(Rational(m.at(d, l)) + Rational(24) * ad * Rational(Integer(l)));
    // The linear tail is exact beyond l = d; verify on the certified range.
    for (long l = d + 1; l <= m.n_max(); ++l)
        if (Rational(m.at(d, l)) + Rational(24) * ad * Rational(Integer(l)) != Rational(0))
            throw SeriesDomainError("renorm_remainder: linear tail fails at (d,l) = (" +
                                    std::to_string(d) + "," + std::to_string(l) + ")");
    return r;
}

Rational dt_side_genus_coeff(unsigned g, int d, const MRowTable& m, const EulerTable& a) {
    if (g < 2) throw SeriesDomainError("dt_side_genus_coeff: genus must be >= 2");
    Rational outer = Rational(-1) * Rational(g % 2 == 0 ? 1 : -1) * bernoulli(2 * g - 2) /
                     (Rational(factorial(2 * g - 2)) * Rational(2 * static_cast<long>(g) - 2));
    // The divergent tail sum_l l^{2g-1} renormalizes to the constant term of
    // the completed weight-2g Eisenstein series, zeta(1-2g)/2; the remainder
    // is summed exactly. At d = 0 this is the square-root normalization of
    // the degree-0 correspondence: (-1) * half tail = (-1/2) * full tail.
    Rational bracket =
        Rational(-24) * Rational(a.at(d)) * zeta_negative(2 * g - 1) / Rational(2);
    std::vector<Rational> r = renorm_remainder(d, m, a);
    for (long l = 1; l <= d; ++l)
        bracket += r[l - 1] * Rational(Integer(l)).pow(2 * static_cast<long>(g) - 2);
    return outer * bracket;
}

CorrespondenceReport correspondence_check(unsigned g_max, int d_max, const MRowTable& m,
                                          const EulerTable& a) {
    CorrespondenceReport report;
    for (unsigned g = 2; g <= g_max; ++g) {
        GWPotential f = gw_potential(g, d_max);
        for (int d = 0; d <= d_max; ++d) {
            Rational gw = f.coeff(d);
            Rational dt = dt_side_genus_coeff(g, d, m, a);
            bool equal = gw == dt;
            report.rows.push_back({g, d, gw, dt, equal});
            report.pass = report.pass && equal;
        }
    }
    return report;
}

} // namespace curvecount
