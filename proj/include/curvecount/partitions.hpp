#ifndef CURVECOUNT_PARTITIONS_HPP
#define CURVECOUNT_PARTITIONS_HPP

#include <cstdint>

#include "curvecount/dual.hpp"
#include "curvecount/series.hpp"

namespace curvecount {

/// Number of d-dimensional partitions of n, i.e. downward-closed subsets of
/// N^d of cardinality n, counted by exhaustive canonical enumeration (cells
/// added in increasing lexicographic order, so each ideal is generated once).
/// P_2 counts ordinary partitions and P_3 plane partitions; the generating
/// series pin the convention. Guarded: enumeration is exponential in n.
unsigned long count_partitions(int dim, int n);

/// Largest n accepted by count_partitions for this dimension.
int partition_guard(int dim);

/// sum_n P_d(n) q^n as an exact series.
MultiSeries<Rational> partition_series(int dim, int n_max);

/// (sum_n P_d(n) q^n)^(e_Y * eps) = 1 + eps e_Y log(sum P_d q^n): the
/// eps-coefficients are the Euler characteristics of the translation
/// quotients of the Hilbert schemes of points of Y x A, dim(Y x A) = d.
MultiSeries<DualNumber> kummer_series(int dim, long euler_y, int n_max);

enum class Threefold { k3xe, abelian };

/// Degree-0 reduced invariants: 24 (-1)^{n-1} sigma_2(n) / n for the K3 x E
/// variant and (-1)^{n-1} sigma_2(n) / n for the abelian one. The (-1)^n
/// Behrend weight per point is a documented constant, not computed here.
Rational dt_degree0(long n, Threefold variant);

} // namespace curvecount

#endif
