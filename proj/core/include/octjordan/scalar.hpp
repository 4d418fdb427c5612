#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "octjordan/errors.hpp"

namespace octjordan {

/// Arbitrary-precision rational number.
///
/// Invariants: always reduced, denominator > 0, zero is 0/1. Arithmetic is
/// exact; division by zero throws std::domain_error. Values are immutable
/// in spirit: every operation returns a fresh value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(mpz_class n) : v_(std::move(n)) {}
    Rational(mpz_class n, mpz_class d);

    /// Parses "p" or "p/q" (optional leading sign, no spaces).
    static Rational from_string(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Nearest machine double (GMP rounds toward zero, error below 1 ulp).
    double to_double() const { return v_.get_d(); }

    std::string str() const;

private:
    mpq_class v_; // kept canonical by mpq_class arithmetic
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact field element: either a plain rational or an element of the
/// quadratic extension Q(sqrt5), stored as rat + surd*sqrt5.
///
/// The variant tag is sticky: combining a QuadExt with a Rational promotes
/// the rational operand, never the reverse, so a computation that has seen
/// sqrt5 stays in the extension even when the surd part cancels to zero.
/// Equality is by value (Rational r equals QuadExt(r, 0)).
class Scalar {
public:
    enum class Kind { rational, quadext };

    Scalar() : rat_(0), surd_(0), kind_(Kind::rational) {}
    Scalar(long n) : rat_(n), surd_(0), kind_(Kind::rational) {}
    Scalar(Rational r) : rat_(std::move(r)), surd_(0), kind_(Kind::rational) {}
    Scalar(long n, long d) : rat_(n, d), surd_(0), kind_(Kind::rational) {}

    static Scalar quadext(Rational rat, Rational surd) {
        Scalar s(std::move(rat));
        s.surd_ = std::move(surd);
        s.kind_ = Kind::quadext;
        return s;
    }
    static Scalar sqrt5() { return quadext(Rational(0), Rational(1)); }

    /// Parses the scalar text grammar: "p/q", "p", "p/q+r/s*sqrt5",
    /// "sqrt5", "-2*sqrt5", ... (no spaces).
    static Scalar from_string(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational_variant() const { return kind_ == Kind::rational; }
    const Rational& rat() const { return rat_; }
    const Rational& surd() const { return surd_; }

    bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Multiplicative inverse. For a + b*sqrt5 the conjugate trick
    /// (a - b*sqrt5)/(a^2 - 5 b^2) is exact; the denominator vanishes
    /// only at zero because sqrt5 is irrational.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.rat_ == b.rat_ && a.surd_ == b.surd_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    double to_double() const;

    std::string str() const;

private:
    Rational rat_;
    Rational surd_;
    Kind kind_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace octjordan
