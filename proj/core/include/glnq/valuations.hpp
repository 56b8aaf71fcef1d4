#pragma once

#include <cstdint>

namespace glnq {

class Partition;

/* Exact ell-adic valuations, computed symbolically: Legendre's formula for
 * factorials and lifting-the-exponent for the q-power terms q^m - 1.  Big
 * integers are never factored outside of tests. */

// Largest r with ell^r | m.  m must be nonzero.
unsigned v_int(std::uint64_t ell, std::int64_t m);

// Sum of base-ell digits of n.
unsigned digit_sum(std::uint64_t ell, std::uint64_t n);

// v_ell(n!) = (n - digit_sum_ell(n)) / (ell - 1).
unsigned v_factorial(std::uint64_t ell, std::uint64_t n);

// v_ell(n! / (n-k)!), 0 <= k <= n.
unsigned v_falling(std::uint64_t ell, std::uint64_t n, std::uint64_t k);

// v_2(q^m - 1) for odd q >= 3, m >= 1:
//   m odd:  v2(q-1)
//   m even: v2(q-1) + v2(q+1) + v2(m) - 1
unsigned v2_qpow_minus_one(std::uint64_t q, std::uint64_t m);

// v_2 of psi_n(q) = prod_{i=1..n} (q^i - 1).
unsigned v2_psi(std::uint64_t q, unsigned n);

// v_2 of the denominator of H(lambda, q^d): sum over hooks h of
// v2(q^{d|h|} - 1).  The numerator q^{d alpha} is odd.
unsigned v2_H_denominator(const Partition& lambda, std::uint64_t q, unsigned d);

} // namespace glnq
