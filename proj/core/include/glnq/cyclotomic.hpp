#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glnq {

/* Exact arithmetic in Z[zeta_M]: integer coefficient vectors on the power
 * basis 1, zeta, ..., zeta^{phi(M)-1}, reduced by the M-th cyclotomic
 * polynomial.  No floating point anywhere. */

class CycRing {
  public:
    explicit CycRing(unsigned M);

    unsigned order() const { return M_; }
    unsigned degree() const { return deg_; }

    // zeta^k as a reduced coefficient vector, any k (taken mod M).
    const std::vector<std::int64_t>& zeta_row(std::uint64_t k) const {
        return rows_[k % M_];
    }

  private:
    unsigned M_;
    unsigned deg_;
    std::vector<std::int64_t> phi_; // Phi_M, monic, degree deg_
    std::vector<std::vector<std::int64_t>> rows_; // x^k mod Phi_M, k < M
};

class CycInt {
  public:
    CycInt() = default;
    explicit CycInt(const CycRing& ring) : ring_(&ring), c_(ring.degree(), 0) {}

    static CycInt zeta_power(const CycRing& ring, std::uint64_t k);
    static CycInt integer(const CycRing& ring, std::int64_t v);

    const CycRing& ring() const { return *ring_; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt operator+(const CycInt& o) const { CycInt r = *this; r += o; return r; }
    CycInt operator-(const CycInt& o) const { CycInt r = *this; r -= o; return r; }
    CycInt operator*(const CycInt& o) const;
    CycInt& add_zeta_multiple(std::uint64_t k, std::int64_t mult); // += mult * zeta^k
    CycInt& scale(std::int64_t m);
    // Divides every coefficient; throws if inexact.
    CycInt& divexact(std::int64_t d);

    CycInt conjugate() const; // zeta -> zeta^-1

    bool is_zero() const;
    bool is_integer() const;
    std::int64_t as_integer() const;
    bool operator==(const CycInt& o) const { return c_ == o.c_; }

    std::string to_string() const;

  private:
    const CycRing* ring_ = nullptr;
    std::vector<std::int64_t> c_;
};

} // namespace glnq
