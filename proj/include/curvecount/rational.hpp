#ifndef CURVECOUNT_RATIONAL_HPP
#define CURVECOUNT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "curvecount/errors.hpp"

namespace curvecount {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. The universal coefficient scalar: everything downstream is
/// exact, there is no floating point anywhere in the computation path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den) { normalize(); }
    Rational(const Integer& num, const Integer& den) : v_(num, den) { normalize(); }

    /// Parses "num/den" or a bare integer "num".
    static Rational parse(const std::string& s) {
        Rational r;
        if (r.v_.set_str(s, 10) != 0)
            throw SeriesDomainError("cannot parse rational: '" + s + "'");
        r.normalize();
        return r;
    }

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Exact integer value; throws if the denominator is not 1.
    Integer to_integer() const {
        if (!is_integer())
            throw SeriesDomainError("rational " + to_string() + " is not an integer");
        return v_.get_num();
    }

    Rational inv() const {
        if (is_zero()) throw SeriesDomainError("division by zero rational");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Rational base = *this, acc = Rational(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Always "num/den", explicit denominator ("5" prints as "5/1").
    std::string to_string() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw SeriesDomainError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

private:
    void normalize() {
        if (v_.get_den() == 0) throw SeriesDomainError("zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace curvecount

#endif
