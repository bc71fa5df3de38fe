#ifndef CURVECOUNT_INVARIANTS_HPP
#define CURVECOUNT_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvecount/jacobi.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

enum class Route { closed_formula, multiple_cover, wall_crossing, product_log };

std::string route_name(Route r);
Route route_from_name(const std::string& s);

/// Curve class n[pt] + beta + d[E] on the product of a K3 surface and an
/// elliptic curve. beta is recorded through its self-intersection and
/// divisibility; beta = 0 is a separate marker (divisibility is meaningless
/// there: every k divides the zero class).
struct K3xEClass {
    long n = 0;
    bool beta_zero = true;
    long beta_sq = 0;  // even, >= -2; ignored when beta_zero
    long beta_div = 1; // >= 1; ignored when beta_zero
    int d = 0;

    void validate() const;
};

/// Curve class of type (d1, d2, d3) on an abelian threefold. Defined when
/// n != 0 or at least two of the d_i are positive.
struct AbelianClass {
    long n = 0;
    long d1 = 0, d2 = 0, d3 = 0;

    void validate() const;
    bool is_degenerate_type() const; // (0,0,d) up to permutation
    long degenerate_d() const;
};

struct InvariantRecord {
    std::string variant; // "k3xe" | "abelian"
    std::map<std::string, std::string> klass;
    Rational value;
    Route route = Route::closed_formula;
};

/// Reduced DT invariant of K3 x E in class (0, d), n >= 1. Route
/// closed_formula evaluates (-1)^n sum_{k|n} m(d, n/k)/k; route product_log
/// reads the (-p)^n-coefficient of the logarithm of
/// prod_l (1 - p^l)^{-m(d,l)}. The two must agree identically.
Rational dt_k3xe_0d(long n, int d, Route route, const MRowTable& m);

/// Comparison variant restricting the divisor sum to k | gcd(n, d); kept
/// behind its own entry point so the discrepancy against dt_k3xe_0d can be
/// tabulated (see the CLI verify report).
Rational dt_k3xe_0d_gcd_variant(long n, int d, const MRowTable& m);

/// Multiple-cover evaluator for arbitrary K3 x E classes:
///   (-1)^n sum_{k >= 1, k | (n, beta)} m((beta/k)^2/2 + 1, d, n/k) / k.
Rational mc_k3xe(const K3xEClass& c, const MTable& m);

/// Reduced DT of an abelian threefold in class of type (0,0,d), n >= 1:
///   (-1)^{n-1} / n * sum_{k | gcd(n,d)} k^2,   gcd(n, 0) = n.
Rational dt_abelian_closed(long n, long d);

/// The multiple-cover sum over k | gcd(n, d1 d2, d1 d3, d2 d3), k^2 | d1 d2 d3:
///   (-1)^n sum_k n_factor(d1,d2,d3,k) a((4 d1 d2 d3 - n^2)/k^2) / k.
Rational dt_abelian_mc(const AbelianClass& c, const QuadraticCoeffTable& a);

/// sum of delta^2 over divisors delta of
/// gcd(k, d1, d2, d3, d1d2/k, d1d3/k, d2d3/k, d1d2d3/k^2), zero entries
/// ignored; 0 when a bracket entry is not an integer.
Integer n_factor(long d1, long d2, long d3, long k);

/// N^red_{n,(0,d)} = 24 sigma_2(gcd(n,d)) / n^2 for n >= 1, gcd(n,0) = n.
Rational n_red_k3xe(long n, long d);

/// L_{n,(0,d)} = a_d if n = 0, else 0.
Rational l_k3xe(long n, int d, const EulerTable& a);

/// L^red_{n,(0,d)} = 0 for all n and d.
Rational l_red_k3xe(long n, int d);

/// Reduced stable-pairs invariant of K3 x E in class (0, d):
///   PT_{n,(0,d)} = DT_{n,(0,d)}
///     - 24 [ log prod_l (1-(-q)^l)^l ]_{q^n} a_d.
/// In particular PT_{n,(0,0)} = 0 for all n >= 1.
Rational pt_k3xe_0d(long n, int d, const MRowTable& m, const EulerTable& a);

struct DtPtRow {
    int d;
    bool pass;
};

struct DtPtReport {
    std::vector<DtPtRow> rows;
    bool pass = true;
};

/// Verifies exp(sum_n DT_{n,(0,d)} q^n) = M(-q)^{-24 a_d} exp(sum_n PT q^n)
/// as truncated series to q^{n_max} for every d <= d_max.
DtPtReport dtpt_verify_k3xe(int d_max, int n_max, const MRowTable& m, const EulerTable& a);

struct AbelianDtPtRecord {
    Rational dt;
    Rational pt;
    bool equal;
};

/// DT/PT comparison for abelian classes of type (0,0,d), n >= 1. The
/// wall-crossing correction between the two series is a convolution against
/// ordinary stable-pairs invariants in classes (n', (0,d)), all of which
/// vanish, so the reduced invariants agree term by term.
AbelianDtPtRecord dtpt_abelian(const AbelianClass& c);

} // namespace curvecount

#endif
