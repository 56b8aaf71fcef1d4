#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "glnq/check.hpp"

namespace glnq {

/* F_q arithmetic for odd q = p^e and the polynomial alphabet: monic
 * irreducibles different from x, the reciprocal involution f -> f*, and
 * its orbits.  Elements are stored as indices in [0, q): base-p digit
 * packing of the coordinate vector against the fixed modulus basis. */

class FieldFq {
  public:
    // e > 1 uses the lexicographically least monic irreducible modulus,
    // so enumeration order and orbit representatives are reproducible.
    FieldFq(unsigned p, unsigned e);
    static FieldFq from_q(std::uint64_t q);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    unsigned add(unsigned a, unsigned b) const;
    unsigned sub(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;
    unsigned pow(unsigned a, std::uint64_t k) const;

    unsigned one() const { return 1 % q_; }
    unsigned generator() const { return generator_; }
    // Discrete log base generator(), defined on nonzero elements.
    unsigned dlog(unsigned a) const;
    bool is_square(unsigned a) const;
    unsigned least_nonsquare() const;

  private:
    unsigned p_, e_;
    std::uint64_t q_;
    std::vector<unsigned> modulus_; // coeffs of x^0..x^{e-1}; leading 1 implicit
    unsigned generator_ = 0;
    std::vector<unsigned> dlog_;

    std::vector<unsigned> unpack(unsigned a) const;
    unsigned pack(const std::vector<unsigned>& digits) const;
};

// Monic polynomial over F_q; coefficients coeffs[i] multiply x^i and
// coeffs.back() == 1.
struct FqPoly {
    const FieldFq* field = nullptr;
    std::vector<unsigned> coeffs;

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    unsigned constant_term() const { return coeffs[0]; }
    bool operator==(const FqPoly& o) const { return coeffs == o.coeffs; }
};

// Deterministic key: base-q digits of the negated non-leading coefficients,
// constant term least significant.  x - 1 gets key 1, x - 2 key 2, ...
std::uint64_t poly_key(const FqPoly& f);
FqPoly poly_from_key(const FieldFq& field, unsigned degree, std::uint64_t key);
std::string poly_to_string(const FqPoly& f);

unsigned poly_eval(const FqPoly& f, unsigned x);
bool poly_irreducible(const FqPoly& f);

// Monic normalization of T^{deg f} f(1/T); requires f(0) != 0.  Involution.
FqPoly reciprocal(const FqPoly& f);

// Streams every monic irreducible of degree d except x, ascending by key.
void irreducibles(const FieldFq& field, unsigned d, Budget& budget,
                  const std::function<void(const FqPoly&)>& fn);
std::vector<FqPoly> irreducibles_of(const FieldFq& field, unsigned d, Budget& budget);

// Necklace / Moebius count of the same set (excludes x at d = 1).
std::uint64_t irreducible_count(std::uint64_t q, unsigned d);

int moebius(unsigned n);

// An orbit {f, f*} under the reciprocal involution; rep has the smaller key.
struct PolyOrbit {
    FqPoly rep;
    unsigned size = 1; // 1 iff rep is self-reciprocal
};

std::vector<PolyOrbit> orbits(const FieldFq& field, unsigned d, Budget& budget);

} // namespace glnq
