#ifndef CURVECOUNT_NUMTHEORY_HPP
#define CURVECOUNT_NUMTHEORY_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "curvecount/rational.hpp"

namespace curvecount {

/// gcd(|a|,|b|) with gcd(x,0) = |x| and gcd(0,0) = 0. The zero class is
/// divisible by everything, so divisor sums over gcds quietly absorb
/// zero entries.
long gcd_nonneg(long a, long b);

/// gcd over a list, zero entries ignored (gcd of all-zero list is 0).
long gcd_list(std::initializer_list<long> xs);

/// Positive divisors of n >= 1, ascending.
std::vector<long> divisors(long n);

/// sigma_s(n) = sum of l^s over positive divisors l of n. Errors on n <= 0;
/// callers must special-case the zero class themselves.
Integer sigma(unsigned s, long n);

/// Binomial coefficient C(n, k), zero for k < 0 or k > n.
Integer binomial(unsigned long n, long k);

/// Bernoulli number B_k with B_1 = -1/2, by the Pascal-row recurrence
/// sum_{j=0}^{k} C(k+1,j) B_j = 0. Memoized; thread-safe.
Rational bernoulli(unsigned k);

/// zeta(-s) = -B_{s+1}/(s+1) for s >= 0, the negative-zeta renormalization
/// of divergent power sums sum_l l^s.
Rational zeta_negative(unsigned s);

/// Factorial as an exact integer.
Integer factorial(unsigned long n);

} // namespace curvecount

#endif
