#include <doctest.h>

#include "glnq/bigint.hpp"

using glnq::Nat;

TEST_CASE("Nat basic arithmetic") {
    CHECK(Nat(0).to_string() == "0");
    CHECK(Nat(123456789012345ull).to_string() == "123456789012345");
    CHECK((Nat(999) + Nat(1)).to_string() == "1000");
    CHECK((Nat(1000) - Nat(1)).to_string() == "999");
    CHECK((Nat(1ull << 62) + Nat(1ull << 62)).to_string() == "9223372036854775808");
    CHECK((Nat(0xffffffffull) * Nat(0xffffffffull)).to_string() == "18446744065119617025");
}

TEST_CASE("Nat factorial and power") {
    CHECK(Nat::factorial(20).to_string() == "2432902008176640000");
    CHECK(Nat::factorial(25).to_string() == "15511210043330985984000000");
    CHECK(Nat::power(2, 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("Nat division and valuation") {
    Nat a = Nat::factorial(25);
    CHECK(a.v2() == 22); // 25 - s_2(25) = 25 - 3
    Nat b = a;
    CHECK(b.divmod_small(10) == 0);
    Nat c = Nat::power(3, 30) - Nat(1); // 205891132094648 = 2^3 * odd
    CHECK(c.valuation(2) == 3);
    CHECK(Nat(48).valuation(3) == 1);
    CHECK(Nat(48).v2() == 4);
}

TEST_CASE("Nat ordering") {
    CHECK(Nat(5) < Nat(7));
    CHECK(Nat::power(2, 64) > Nat(1ull << 63));
    CHECK(Nat(42) == Nat(42));
}
