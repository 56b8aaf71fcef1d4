#include <doctest.h>

#include "glnq/bigint.hpp"
#include "glnq/partitions.hpp"
#include "glnq/valuations.hpp"

using namespace glnq;

TEST_CASE("v_int") {
    CHECK(v_int(2, 1) == 0);
    CHECK(v_int(2, 8) == 3);
    CHECK(v_int(3, -18) == 2);
    CHECK_THROWS(v_int(2, 0));
}

TEST_CASE("v_factorial via Legendre") {
    CHECK(v_factorial(2, 0) == 0);
    CHECK(v_factorial(2, 10) == 8);
    CHECK(v_factorial(3, 9) == 4);
    // against the direct floor sum, ell in {2,3,5}, n <= 200
    for (std::uint64_t ell : {2u, 3u, 5u}) {
        for (unsigned n = 0; n <= 200; ++n) {
            unsigned direct = 0;
            for (std::uint64_t p = ell; p <= n; p *= ell) direct += static_cast<unsigned>(n / p);
            CHECK(v_factorial(ell, n) == direct);
        }
    }
}

TEST_CASE("v_falling") {
    CHECK(v_falling(2, 10, 0) == 0);
    CHECK(v_falling(2, 10, 3) == 4); // v2(10*9*8)
    CHECK(v_falling(2, 8, 1) == 3);
    CHECK_THROWS(v_falling(2, 3, 5));
    // additivity
    for (unsigned n = 0; n <= 60; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(v_falling(2, n, k) == v_factorial(2, n) - v_factorial(2, n - k));
}

TEST_CASE("lifting the exponent for q^m - 1") {
    CHECK(v2_qpow_minus_one(3, 1) == 1);
    CHECK(v2_qpow_minus_one(3, 2) == 3);  // v2(8)
    CHECK(v2_qpow_minus_one(7, 4) == 5);  // v2(2400)
    CHECK_THROWS(v2_qpow_minus_one(4, 1));
    // big-integer cross-check, odd q <= 27, m <= 30
    for (std::uint64_t q = 3; q <= 27; q += 2)
        for (unsigned m = 1; m <= 30; ++m) {
            Nat big = Nat::power(q, m) - Nat(1);
            CHECK(v2_qpow_minus_one(q, m) == big.v2());
        }
}

TEST_CASE("v2 of psi_n(q)") {
    CHECK(v2_psi(3, 0) == 0);
    CHECK(v2_psi(3, 2) == 4); // v2(2*8)
    CHECK(v2_psi(5, 3) == 7); // v2(4*24*124) = 2+3+2
    for (std::uint64_t q : {3u, 5u, 7u}) {
        Nat prod(1);
        for (unsigned i = 1; i <= 20; ++i) {
            prod *= Nat::power(q, i) - Nat(1);
            CHECK(v2_psi(q, i) == prod.v2());
        }
    }
}

TEST_CASE("v2 of the H denominator") {
    CHECK(v2_H_denominator(Partition{}, 3, 1) == 0);
    CHECK(v2_H_denominator(Partition({1}), 3, 1) == 1);
    CHECK(v2_H_denominator(Partition({2}), 3, 1) == 4); // hooks {2,1}: v2(8)+v2(2)
}
