#ifndef OCTO_RATIONAL_HPP
#define OCTO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "octo/errors.hpp"

namespace octo {

using BigInt = mpz_class;

/// mpz has no long long constructor; long is 64-bit on every platform we
/// target.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Arithmetic never rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, mirrors int literals
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(const BigInt& n) : q_(n) {}
    Rational(long n, long d);
    Rational(const BigInt& n, const BigInt& d);

    static Rational from_string(const std::string& s);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

private:
    mpq_class q_;
};

using Vec = std::vector<Rational>;

/// Non-negative arbitrary-precision count; closed under sum and product.
class BigCount {
public:
    BigCount() : v_(0) {}
    BigCount(unsigned long v) : v_(v) {} // NOLINT: implicit for literals
    explicit BigCount(const BigInt& v);

    const BigInt& value() const { return v_; }
    std::string to_string() const { return v_.get_str(); }
    unsigned long to_ulong() const;

    BigCount& operator+=(const BigCount& o) { v_ += o.v_; return *this; }
    BigCount& operator*=(const BigCount& o) { v_ *= o.v_; return *this; }
    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

    /// Exact quotient; anything else is an internal error.
    BigCount operator/(const BigCount& o) const;

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigCount& a, const BigCount& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigCount& a, const BigCount& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigCount& a, const BigCount& b) { return a.v_ <= b.v_; }

private:
    BigInt v_;
};

/// Exact C(n, k). Throws DomainError when k > n.
BigCount binomial(unsigned long n, unsigned long k);

} // namespace octo

#endif
