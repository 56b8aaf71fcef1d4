#pragma once

#include <cstdint>
#include <vector>

#include "glnq/cyclotomic.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/gl2.hpp"

namespace glnq::oracle {

/* Ground truth at tiny q: the whole group GL_2(F_q) as explicit matrices,
 * conjugacy classes, induced characters by full summation, Frobenius-Schur
 * indicators, and determinants of induced representations via their
 * monomial structure.  Everything is exact in Z[zeta_M] with
 * M = p (q^2 - 1), the lcm of the element orders that occur. */

struct Mat2 {
    unsigned a = 0, b = 0, c = 0, d = 0; // [[a, b], [c, d]]
    bool operator==(const Mat2&) const = default;
};

struct ClassData {
    Mat2 rep;                 // least element of the class in enumeration order
    std::uint32_t size = 0;
    std::uint64_t centralizer_order = 0;
};

enum class Subgroup { borel, zn, nonsplit_torus, diagonal_torus };

// A one-dimensional character of a subgroup: exponents against the fixed
// generators.  borel/diagonal use (j1, j2) mod q-1; zn and the nonsplit
// torus use j1 mod q^2-1 (zn additionally twists N by the fixed additive
// character zeta_p^u).
struct SubChar {
    Subgroup H = Subgroup::borel;
    std::uint64_t j1 = 0, j2 = 0;
};

struct Monomial {
    int sign = 1;
    std::uint64_t zeta_exp = 0; // exponent of zeta_M
};

class Gl2Brute {
  public:
    explicit Gl2Brute(unsigned q); // q in {3, 5, 7}

    unsigned q() const { return q_; }
    std::uint64_t group_order() const { return elements_.size(); }
    const FieldFq& field() const { return Fq_; }
    const FieldFq& quadratic_field() const { return Fq2_; }
    const CycRing& ring() const { return ring_; }

    const std::vector<Mat2>& elements() const { return elements_; }
    const std::vector<ClassData>& classes() const { return classes_; }
    unsigned class_of(const Mat2& g) const;

    Mat2 mul(const Mat2& x, const Mat2& y) const;
    Mat2 inverse(const Mat2& x) const;

    unsigned class_identity() const { return class_of(identity()); }
    unsigned class_h1() const;  // diag(-1, 1)
    unsigned class_h2() const;  // -I
    unsigned class_tx() const;  // diag(x, 1), x the least nonsquare
    Mat2 identity() const { return Mat2{1, 0, 0, 1}; }

    using ClassFunction = std::vector<CycInt>; // indexed by class

    std::uint64_t subgroup_order(Subgroup H) const;
    bool in_subgroup(Subgroup H, const Mat2& g) const;
    // sigma(g) as a zeta_M exponent; g must lie in H.
    std::uint64_t sub_char_exp(const SubChar& sc, const Mat2& g) const;

    // (1/|H|) sum_{x : x^-1 g x in H} sigma(x^-1 g x), summed over the group.
    ClassFunction induced_character(const SubChar& sc) const;

    // Ind_ZN(theta ox psi) - Ind_E(theta); requires theta regular.  The
    // result is checked to be an honest character of degree q - 1.
    ClassFunction cuspidal_character(std::uint64_t theta) const;

    // <chi, psi> in Z[zeta_M] (exact); irreducible iff norm 1.
    CycInt inner_product(const ClassFunction& a, const ClassFunction& b) const;
    // (1/|G|) sum_g chi(g^2): requires irreducible input.
    int frobenius_schur(const ClassFunction& chi) const;
    bool is_real_valued(const ClassFunction& chi) const;
    std::int64_t degree_of(const ClassFunction& chi) const;

    // det(Ind_H sigma)(g) from the permutation-with-cocycle structure.
    Monomial det_induced(const SubChar& sc, const Mat2& g) const;
    // det pi_theta = det Ind_ZN(theta psi) / det Ind_E(theta).
    Monomial det_cuspidal(std::uint64_t theta, const Mat2& g) const;
    // True iff det pi_theta is the trivial character (checked at t_x).
    bool cuspidal_det_trivial(std::uint64_t theta) const;

    struct Irreducible {
        gl2::Gl2Rep label;
        ClassFunction chi;
    };
    // All q^2 - 1 irreducible characters, labelled by family parameters.
    const std::vector<Irreducible>& irreducibles() const;

    CycInt value_at(const ClassFunction& chi, const Mat2& g) const {
        return chi[class_of(g)];
    }

  private:
    unsigned q_;
    FieldFq Fq_;
    FieldFq Fq2_;
    CycRing ring_;
    std::vector<Mat2> elements_;
    std::vector<std::uint32_t> index_of_; // packed matrix -> element index
    std::vector<std::uint32_t> class_of_; // element index -> class
    std::vector<ClassData> classes_;
    std::vector<std::vector<Mat2>> conj_by_class_; // x^-1 rep x for all x
    std::vector<std::uint32_t> sq_class_count_;    // #{g : g^2 in class}
    mutable std::vector<Irreducible> irreducibles_;

    std::uint32_t pack(const Mat2& m) const;
    std::uint32_t index_of(const Mat2& m) const;
    unsigned fq2_elem(unsigned x, unsigned y) const; // x + y t as an index
};

} // namespace glnq::oracle
