#ifndef CURVECOUNT_DUAL_HPP
#define CURVECOUNT_DUAL_HPP

#include <iosfwd>
#include <ostream>
#include <string>

#include "curvecount/rational.hpp"

namespace curvecount {

/// Element of Q[eps]/(eps^2). The eps line carries the quotiented
/// (translation-reduced) bookkeeping in every integration-map formula.
class DualNumber {
public:
    DualNumber() = default;
    DualNumber(Rational real) : re_(std::move(real)) {} // NOLINT
    DualNumber(long n) : re_(n) {}                      // NOLINT
    DualNumber(int n) : re_(n) {}                       // NOLINT
    DualNumber(Rational real, Rational eps) : re_(std::move(real)), eps_(std::move(eps)) {}

    static DualNumber eps_unit() { return DualNumber(0, 1); }
    static DualNumber zero() { return DualNumber(); }
    static DualNumber one() { return DualNumber(1); }

    const Rational& real() const { return re_; }
    const Rational& eps() const { return eps_; }

    bool is_zero() const { return re_.is_zero() && eps_.is_zero(); }
    bool is_one() const { return re_.is_one() && eps_.is_zero(); }

    DualNumber inv() const {
        if (re_.is_zero())
            throw SeriesDomainError("dual number " + to_string() + " is not a unit");
        Rational a = re_.inv();
        return DualNumber(a, -eps_ * a * a);
    }

    std::string to_string() const {
        return re_.to_string() + " + " + eps_.to_string() + "*eps";
    }

    DualNumber& operator+=(const DualNumber& o) {
        re_ += o.re_;
        eps_ += o.eps_;
        return *this;
    }
    DualNumber& operator-=(const DualNumber& o) {
        re_ -= o.re_;
        eps_ -= o.eps_;
        return *this;
    }
    // (a + b eps)(c + d eps) = ac + (ad + bc) eps
    DualNumber& operator*=(const DualNumber& o) {
        eps_ = re_ * o.eps_ + eps_ * o.re_;
        re_ *= o.re_;
        return *this;
    }

    friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
    friend DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
    friend DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
    friend DualNumber operator-(const DualNumber& a) { return DualNumber(-a.re_, -a.eps_); }

    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.re_ == b.re_ && a.eps_ == b.eps_;
    }
    friend bool operator!=(const DualNumber& a, const DualNumber& b) { return !(a == b); }

private:
    Rational re_;
    Rational eps_;
};

/// Element of Q[eps1,eps2]/(eps1^2, eps2^2), with eps1*eps2 = eps2*eps1.
/// Coefficients of 1, eps1, eps2, eps1*eps2 in that order.
class BiDualNumber {
public:
    BiDualNumber() = default;
    BiDualNumber(Rational c) : c00_(std::move(c)) {} // NOLINT
    BiDualNumber(long n) : c00_(n) {}                // NOLINT
    BiDualNumber(int n) : c00_(n) {}                 // NOLINT
    BiDualNumber(Rational c00, Rational c10, Rational c01, Rational c11)
        : c00_(std::move(c00)), c10_(std::move(c10)), c01_(std::move(c01)), c11_(std::move(c11)) {}

    static BiDualNumber eps1_unit() { return BiDualNumber(0, 1, 0, 0); }
    static BiDualNumber eps2_unit() { return BiDualNumber(0, 0, 1, 0); }
    static BiDualNumber eps12_unit() { return BiDualNumber(0, 0, 0, 1); }
    static BiDualNumber zero() { return BiDualNumber(); }
    static BiDualNumber one() { return BiDualNumber(1); }

    const Rational& c00() const { return c00_; }
    const Rational& c10() const { return c10_; }
    const Rational& c01() const { return c01_; }
    const Rational& c11() const { return c11_; }

    bool is_zero() const {
        return c00_.is_zero() && c10_.is_zero() && c01_.is_zero() && c11_.is_zero();
    }
    bool is_one() const {
        return c00_.is_one() && c10_.is_zero() && c01_.is_zero() && c11_.is_zero();
    }

    BiDualNumber inv() const {
        if (c00_.is_zero())
            throw SeriesDomainError("bi-dual number " + to_string() + " is not a unit");
        Rational a = c00_.inv(), a2 = a * a;
        return BiDualNumber(a, -c10_ * a2, -c01_ * a2,
                            Rational(2) * c10_ * c01_ * a2 * a - c11_ * a2);
    }

    std::string to_string() const {
        return c00_.to_string() + " + " + c10_.to_string() + "*e1 + " + c01_.to_string() +
               "*e2 + " + c11_.to_string() + "*e1e2";
    }

    BiDualNumber& operator+=(const BiDualNumber& o) {
        c00_ += o.c00_;
        c10_ += o.c10_;
        c01_ += o.c01_;
        c11_ += o.c11_;
        return *this;
    }
    BiDualNumber& operator-=(const BiDualNumber& o) {
        c00_ -= o.c00_;
        c10_ -= o.c10_;
        c01_ -= o.c01_;
        c11_ -= o.c11_;
        return *this;
    }
    BiDualNumber& operator*=(const BiDualNumber& o) {
        Rational n00 = c00_ * o.c00_;
        Rational n10 = c00_ * o.c10_ + c10_ * o.c00_;
        Rational n01 = c00_ * o.c01_ + c01_ * o.c00_;
        Rational n11 = c00_ * o.c11_ + c11_ * o.c00_ + c10_ * o.c01_ + c01_ * o.c10_;
        c00_ = std::move(n00);
        c10_ = std::move(n10);
        c01_ = std::move(n01);
        c11_ = std::move(n11);
        return *this;
    }

    friend BiDualNumber operator+(BiDualNumber a, const BiDualNumber& b) { return a += b; }
    friend BiDualNumber operator-(BiDualNumber a, const BiDualNumber& b) { return a -= b; }
    friend BiDualNumber operator*(BiDualNumber a, const BiDualNumber& b) { return a *= b; }
    friend BiDualNumber operator-(const BiDualNumber& a) {
        return BiDualNumber(-a.c00_, -a.c10_, -a.c01_, -a.c11_);
    }

    friend bool operator==(const BiDualNumber& a, const BiDualNumber& b) {
        return a.c00_ == b.c00_ && a.c10_ == b.c10_ && a.c01_ == b.c01_ && a.c11_ == b.c11_;
    }
    friend bool operator!=(const BiDualNumber& a, const BiDualNumber& b) { return !(a == b); }

private:
    Rational c00_;
    Rational c10_;
    Rational c01_;
    Rational c11_;
};

inline std::ostream& operator<<(std::ostream& os, const DualNumber& x) {
    return os << x.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const BiDualNumber& x) {
    return os << x.to_string();
}

} // namespace curvecount

#endif
