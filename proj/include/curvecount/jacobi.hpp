#ifndef CURVECOUNT_JACOBI_HPP
#define CURVECOUNT_JACOBI_HPP

#include "curvecount/series.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

/// The Weierstrass expansion in (p, t):
///   1/12 + p/(1-p)^2 + sum_{d>=1} sum_{k|d} k (p^k - 2 + p^{-k}) t^d.
/// The t^0 row has one-sided p-support; rows at t^d, d >= 1 are symmetric
/// under p <-> 1/p.
RSeries weierstrass_p(int p_min, int p_max, int t_max);

/// The weak Jacobi form of weight -2 and index 1:
///   (p - 2 + 1/p) prod_{m>=1} (1-p t^m)^2 (1-t^m/p)^2 / (1-t^m)^4.
/// Requires p_min <= -(t_max+1) and p_max >= t_max+1 so every nonzero
/// coefficient up to t_max fits the window.
RSeries phi_m21(int p_min, int p_max, int t_max);

/// Coefficients c(m) of 24 phi_{-2,1} wp read through 4d - k^2, certified
/// for all m <= m_bound; every grid collision of 4d - k^2 is checked for
/// agreement and c(m) = 0 is verified for m < -1.
QuadraticCoeffTable c_table(long m_bound, int k_grid = 6);

/// Coefficients a(m) of -phi_{-2,1} read through 4d - r^2, same
/// certification scheme as c_table.
QuadraticCoeffTable a_table(long m_bound, int k_grid = 6);

/// Direct construction of the fiber-class coefficients:
///   sum m(d,n) p^n t^d = -24 wp(p,t) / prod (1-t^m)^24,
/// certified on 0 <= d <= d_max, n_min <= n <= n_max.
MRowTable m_direct(int d_max, long n_min, long n_max);

/// MacMahon's function M(q) = prod (1-q^n)^{-n}.
RSeries macmahon(int q_max);

/// prod (1-t^m)^{-24}, the generating series of the a_d.
RSeries eta24_inverse(int t_max);

/// The a_d as an integer table.
EulerTable euler_hilb_k3(int d_max);

} // namespace curvecount

#endif
