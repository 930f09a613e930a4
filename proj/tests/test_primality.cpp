#include <doctest.h>

#include <vector>

#include <dedekind/primality.hpp>

using namespace dedekind;

TEST_CASE("small cases and Carmichael numbers") {
    CHECK(is_prime_integer(Int(7)));
    CHECK_FALSE(is_prime_integer(Int(561)));  // 3 * 11 * 17
    CHECK_FALSE(is_prime_integer(Int(1)));
    CHECK(is_prime_integer(Int(2)));
    CHECK_FALSE(is_prime_integer(Int(0)));
    CHECK(is_prime_integer(Int(3)));
    CHECK_FALSE(is_prime_integer(Int(1729)));
    CHECK_FALSE(is_prime_integer(Int("3215031751")));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("agrees with trial division below 10^6") {
    std::vector<bool> composite(1000001, false);
    for (std::size_t p = 2; p * p <= 1000000; ++p) {
        if (composite[p]) continue;
        for (std::size_t q = p * p; q <= 1000000; q += p) composite[q] = true;
    }
    for (long n = 0; n <= 1000000; ++n) {
        const bool expect = n >= 2 && !composite[static_cast<std::size_t>(n)];
        if (is_prime_integer(Int(n)) != expect) {
            CAPTURE(n);
            REQUIRE(is_prime_integer(Int(n)) == expect);
        }
    }
    CHECK(true);
}

TEST_CASE("large inputs") {
    CHECK(is_prime_integer(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_prime_integer(Int("170141183460469231731687303715884105725")));
    // the fixed-witness threshold itself is the smallest strong pseudoprime
    // to the first 13 primes: composite, and just past the witness range
    CHECK_FALSE(is_prime_integer(Int("3317044064679887385961981")));
    // neighboring primes on both sides of the threshold
    CHECK(is_prime_integer(Int("3317044064679887385961813")));
    CHECK(is_prime_integer(Int("3317044064679887385962123")));
}

TEST_CASE("AKS backend agrees with the witness backend on small inputs") {
    PrimalityOptions aks{PrimalityBackend::Aks};
    for (long n : {0L,  1L,   2L,   3L,   4L,   5L,   9L,   31L,  49L, 91L,
                   97L, 121L, 221L, 257L, 341L, 561L, 563L, 841L, 953L}) {
        CAPTURE(n);
        CHECK(is_prime_integer(Int(n), aks) == is_prime_integer(Int(n)));
    }
    CHECK(is_prime_integer(Int(10007), aks));
    CHECK_FALSE(is_prime_integer(Int(10201), aks));  // 101^2, perfect power
}
