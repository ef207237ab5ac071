#include <random>

#include "doctest.h"
#include "octo/rational.hpp"

using octo::BigCount;
using octo::BigInt;
using octo::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(3, -6).numerator() == -1);
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(0, 5).numerator() == 0);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), octo::DivideByZeroError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), octo::DivideByZeroError);
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "7", "-7", "1/2", "-22/7", "123456789123456789/2"}) {
        CHECK(Rational::from_string(s).to_string() == s);
    }
}

TEST_CASE("field laws on randomized triples") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    for (int round = 0; round < 300; ++round) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("binomial values") {
    CHECK(octo::binomial(7, 3).to_string() == "35");
    CHECK(octo::binomial(16, 8).to_string() == "12870");
    CHECK(octo::binomial(5, 0).to_string() == "1");
    CHECK(octo::binomial(0, 0).to_string() == "1");
    CHECK_THROWS_AS(octo::binomial(3, 4), octo::DomainError);
}

TEST_CASE("Pascal identity up to n = 20") {
    for (unsigned long n = 2; n <= 20; ++n)
        for (unsigned long k = 1; k < n; ++k)
            CHECK(octo::binomial(n, k) ==
                  octo::binomial(n - 1, k) + octo::binomial(n - 1, k - 1));
}

TEST_CASE("BigCount stays exact far beyond 64-bit-friendly sizes") {
    BigCount two_pow(1ul);
    for (int i = 0; i < 40; ++i)
        two_pow *= BigCount(2ul);
    CHECK(two_pow.to_string() == "1099511627776"); // 2^40

    const BigCount million(BigInt("1000000"));
    CHECK((million * million).to_string() == "1000000000000"); // 10^12

    const BigCount w_e8(BigInt("696729600"));
    CHECK((w_e8 / BigCount(BigInt("1920"))).to_string() == "362880"); // 9!
    CHECK_THROWS_AS(w_e8 / BigCount(BigInt("11")), octo::InternalError);
    CHECK_THROWS_AS(BigCount(BigInt(-1)), octo::DomainError);
}
