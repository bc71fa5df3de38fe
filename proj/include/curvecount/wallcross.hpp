#ifndef CURVECOUNT_WALLCROSS_HPP
#define CURVECOUNT_WALLCROSS_HPP

#include <map>
#include <utility>

#include "curvecount/dual.hpp"
#include "curvecount/series.hpp"

namespace curvecount {

using GridKey = std::pair<long, int>; // (n, d)

/// Ingredient tables of the dual-number wall-crossing assembly. The tables
/// are injected data pinned to their closed formulas, not geometric
/// computations; missing entries read as zero so the maps are total on the
/// grid.
struct WallcrossInput {
    std::map<GridKey, Rational> n_red; // defined for n >= 1 only
    std::map<GridKey, Rational> l;
    std::map<GridKey, Rational> l_red;
    long n_max = 0;
    int d_max = 0;
};

/// eps-coefficient of
///   exp(sum_{n>0,d} (-1)^{n-1} n N^red_{n,d} eps q^n t^d)
///     * (sum_{n,d} (L_{n,d} + L^red_{n,d} eps) q^n t^d),
/// computed over dual-number coefficients. With the exact ingredient
/// tables this reproduces the reduced DT invariants of K3 x E.
std::map<GridKey, Rational> dual_assemble(const WallcrossInput& input);

/// Bi-dual ingredients: N takes values on the eps1 eps2 line, L in the span
/// of 1 and eps1.
struct BiWallcrossInput {
    std::map<GridKey, BiDualNumber> n_bullet;
    std::map<GridKey, BiDualNumber> l_bullet;
    long n_max = 0;
    int d_max = 0;
};

/// Full product over Q[eps1,eps2]:
///   exp(sum (-1)^{n-1} n N_{n,d} q^n t^d) * (sum L_{n,d} q^n t^d).
std::map<GridKey, BiDualNumber> bidual_assemble(const BiWallcrossInput& input);

/// The pinned K3 x E tables: N^red_{n,d} = 24 sigma_2(gcd(n,d))/n^2,
/// L_{n,d} = a_d [n = 0], L^red = 0.
WallcrossInput k3xe_wallcross_input(long n_max, int d_max);

/// The pinned abelian tables: N_{n,d} = sigma_2(gcd(n,d))/n^2 eps1 eps2,
/// L_{0,0} = 1, L_{0,d} = e(Hilb^d(B)/B) eps1 for d > 0.
BiWallcrossInput abelian_wallcross_input(long n_max, int d_max);

/// e(Hilb^d(B)/B) for an abelian surface B: the q^d-coefficient of
/// log sum_n P_2(n) q^n, which equals sigma_1(d)/d.
Rational hilb_quotient_euler(int d);

} // namespace curvecount

#endif
