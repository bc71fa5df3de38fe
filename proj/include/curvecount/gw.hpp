#ifndef CURVECOUNT_GW_HPP
#define CURVECOUNT_GW_HPP

#include <vector>

#include "curvecount/jacobi.hpp"
#include "curvecount/series.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

/// Renormalized Eisenstein series
///   C_k(t) = -B_k/(k k!) + (2/k!) sum_{n>=1} sigma_{k-1}(n) t^n,
/// for even k >= 2.
RSeries eisenstein(unsigned k, int t_max);

struct GWPotential {
    unsigned genus;
    RSeries series;

    Rational coeff(int d) const { return series.coeff({{Var::t, d}}); }
};

/// Genus-g degree-0 potential
///   F^g(t) = 24 prod(1-t^m)^{-24} (1/(2g-2)) (-1)^g B_{2g-2} C(2g,2) C_{2g}(t)
/// for g >= 2; the 24 is the c_2-volume of the K3 factor.
GWPotential gw_potential(unsigned g, int d_max);

/// Remainder of the linear-tail split m(d,l) = -24 a_d l + r(d,l); returns
/// r(d,l) for l = 1..d and checks r(d,l) = 0 for every certified l > d.
std::vector<Rational> renorm_remainder(int d, const MRowTable& m, const EulerTable& a);

/// Genus coefficient of the renormalized curve-count side:
///   -(-1)^g B_{2g-2}/((2g-2)! (2g-2))
///     * [ -24 a_d zeta(1-2g)/2 + sum_{l=1}^{d} r(d,l) l^{2g-2} ],
/// with zeta(1-2g) = -B_{2g}/(2g). The tail renormalizes at the Eisenstein
/// constant-term weight zeta(1-2g)/2, which at d = 0 is the square-root
/// normalization of the degree-0 correspondence. Equality with
/// gw_potential(g).coeff(d) is the asymptotic correspondence.
Rational dt_side_genus_coeff(unsigned g, int d, const MRowTable& m, const EulerTable& a);

struct CorrespondenceRow {
    unsigned g;
    int d;
    Rational gw;
    Rational dt;
    bool equal;
};

struct CorrespondenceReport {
    std::vector<CorrespondenceRow> rows;
    bool pass = true;
};

/// Both sides on the grid 2 <= g <= g_max, 0 <= d <= d_max; exact equality.
CorrespondenceReport correspondence_check(unsigned g_max, int d_max, const MRowTable& m,
                                          const EulerTable& a);

} // namespace curvecount

#endif
