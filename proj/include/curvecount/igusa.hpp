#ifndef CURVECOUNT_IGUSA_HPP
#define CURVECOUNT_IGUSA_HPP

#include "curvecount/jacobi.hpp"
#include "curvecount/series.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

/// Requested certified ranges for the three-variable master table: h, d up
/// to the given bounds and p-exponents n in [n_min, n_max]. The module pads
/// the internal p-window by 2(h_max + d_max + 2) on both sides; every factor
/// monomial satisfies |k| <= h + d + 1, and the factors contributing to a
/// fixed (t, tt) bidegree carry a total |k| below that pad, so coefficients
/// inside the requested range are exact.
struct IgusaConfig {
    int h_max = 1;
    int d_max = 1;
    long n_min = -5;
    long n_max = 5;

    long pad() const { return 2L * (h_max + d_max + 2); }
};

/// The weight-10 cusp form as a truncated three-variable product
///   p t tt prod (1 - p^k t^h tt^d)^{c(4hd - k^2)}
/// over h, d >= 0, k in Z with (h, d) != (0, 0) or k < 0. The h = d = 0
/// factors reduce to exactly (1 - 1/p)^2.
MultiSeries<Rational> igusa_chi10(const IgusaConfig& cfg, const QuadraticCoeffTable& c);

/// Region-aware expansion of -1/chi10 read as
///   sum m(h,d,n) p^n t^{h-1} tt^{d-1},
/// where the h = d = 0 prefactor expands as -(sum_{j>=1} j p^j) t^-1 tt^-1
/// and every other factor in powers of its own monomial.
MTable igusa_m_table(const IgusaConfig& cfg, const QuadraticCoeffTable& c);

} // namespace curvecount

#endif
