#include "octo/rational.hpp"

namespace octo {

Rational::Rational(long n, long d) {
    if (d == 0)
        throw DivideByZeroError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (sgn(d) == 0)
        throw DivideByZeroError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DivideByZeroError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Rational::to_string() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigCount::BigCount(const BigInt& v) : v_(v) {
    if (sgn(v_) < 0)
        throw DomainError("BigCount from negative integer");
}

unsigned long BigCount::to_ulong() const {
    if (!v_.fits_ulong_p())
        throw DomainError("BigCount does not fit in unsigned long");
    return v_.get_ui();
}

BigCount BigCount::operator/(const BigCount& o) const {
    if (sgn(o.v_) == 0)
        throw DivideByZeroError("BigCount division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    if (sgn(r) != 0)
        throw InternalError("BigCount division is not exact: " + v_.get_str() + "/" + o.v_.get_str());
    return BigCount(q);
}

BigCount binomial(unsigned long n, unsigned long k) {
    if (k > n)
        throw DomainError("binomial(n, k) requires k <= n");
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return BigCount(b);
}

} // namespace octo
