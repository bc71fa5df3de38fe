#include "curvecount/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

namespace curvecount {

long gcd_nonneg(long a, long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        long r = a % b;
        a = b;
        b = r;
    }
    return a;
}

long gcd_list(std::initializer_list<long> xs) {
    long g = 0;
    for (long x : xs) g = gcd_nonneg(g, x);
    return g;
}

std::vector<long> divisors(long n) {
    if (n <= 0) throw SeriesDomainError("divisors: n must be positive");
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

Integer sigma(unsigned s, long n) {
    if (n <= 0) throw SeriesDomainError("sigma: n must be positive");
    Integer acc = 0;
    for (long d : divisors(n)) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), s);
        acc += p;
    }
    return acc;
}

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Rational bernoulli(unsigned k) {
    static std::vector<Rational> cache = {Rational(1), Rational(-1, 2)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= k) {
        unsigned long i = cache.size();
        Rational acc;
        for (unsigned long j = 0; j < i; ++j)
            acc += Rational(binomial(i + 1, static_cast<long>(j))) * cache[j];
        cache.push_back(-acc / Rational(Integer(i + 1)));
    }
    return cache[k];
}

Rational zeta_negative(unsigned s) {
    return -bernoulli(s + 1) / Rational(Integer(s + 1));
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace curvecount
