#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lss/bigint.hpp"

using lss::BigInt;

TEST_CASE("small arithmetic matches long long") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_longlong() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_longlong() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_longlong() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_longlong() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_longlong() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("divmod invariant on large operands") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = BigInt(dist(rng)) * BigInt(dist(rng)) * BigInt(dist(rng)) + BigInt(dist(rng));
        BigInt b = BigInt(dist(rng)) * BigInt(dist(rng));
        if (b.is_zero()) continue;
        BigInt q, r;
        divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("string round trip") {
    CHECK(BigInt::from_string("0").to_string() == "0");
    CHECK(BigInt::from_string("-12345678901234567890123456789").to_string() ==
          "-12345678901234567890123456789");
    BigInt big = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
    CHECK(big.to_string() == "340282366920938463463374607431768211456");
    CHECK((big - BigInt(1)).to_string() == "340282366920938463463374607431768211455");
    CHECK_THROWS_AS(BigInt::from_string("12a"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(1, 1000000);
    for (int iter = 0; iter < 200; ++iter) {
        long long a = dist(rng), b = dist(rng), g = dist(rng);
        BigInt d = BigInt::gcd(BigInt(a * g), BigInt(b * g));
        CHECK((BigInt(a * g) % d).is_zero());
        CHECK((BigInt(b * g) % d).is_zero());
        CHECK((d % BigInt(g)).is_zero());
    }
}

TEST_CASE("division by zero rejected") {
    BigInt q, r;
    CHECK_THROWS_AS(divmod(BigInt(5), BigInt(0), q, r), std::domain_error);
}

#include "bigint_vectors.inc"

TEST_CASE("frozen multi-limb vectors") {
    for (const auto& v : kBigIntVectors) {
        BigInt a = BigInt::from_string(v.a);
        BigInt b = BigInt::from_string(v.b);
        CHECK((a + b).to_string() == v.sum);
        CHECK((a - b).to_string() == v.diff);
        CHECK((a * b).to_string() == v.prod);
        BigInt q, r;
        divmod(a, b, q, r);
        CHECK(q.to_string() == v.quot);
        CHECK(r.to_string() == v.rem);
    }
}
