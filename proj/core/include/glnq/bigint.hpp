#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glnq {

/* Arbitrary-precision natural number, little-endian base 2^32 limbs.
 * Only the operations the library actually needs: the counting and
 * degree formulas here never go negative, so there is no sign. */
class Nat {
  public:
    Nat() = default;
    Nat(std::uint64_t v);

    static Nat power(std::uint64_t base, unsigned exp);
    static Nat factorial(unsigned n);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    Nat& operator+=(const Nat& o);
    // Requires *this >= o.
    Nat& operator-=(const Nat& o);
    Nat operator+(const Nat& o) const { Nat r = *this; r += o; return r; }
    Nat operator-(const Nat& o) const { Nat r = *this; r -= o; return r; }
    Nat operator*(const Nat& o) const;
    Nat& operator*=(const Nat& o) { *this = *this * o; return *this; }
    Nat& mul_small(std::uint64_t m);

    // Division by a machine word; returns the remainder.
    std::uint64_t divmod_small(std::uint64_t d);
    // Division asserting zero remainder.
    Nat& divexact_small(std::uint64_t d);

    std::strong_ordering operator<=>(const Nat& o) const;
    bool operator==(const Nat& o) const = default;

    // 2-adic valuation; requires nonzero.
    unsigned v2() const;
    // ell-adic valuation by repeated division; requires nonzero.
    unsigned valuation(std::uint64_t ell) const;

    // Fits in uint64 (and its value), for interop with word-sized paths.
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t as_u64() const;

    std::string to_string() const;

  private:
    std::vector<std::uint32_t> limbs_; // empty == 0, no trailing zero limb
    void trim();
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

} // namespace glnq
