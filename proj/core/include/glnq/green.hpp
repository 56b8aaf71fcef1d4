#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "glnq/bigint.hpp"
#include "glnq/check.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/partitions.hpp"

namespace glnq {

/* Labels for the irreducible characters of GL_n(F_q): finitely supported
 * partition-valued maps on monic irreducibles != x with total weighted
 * size n, together with duality, exact degrees, and 2-adic degree
 * valuations. */

struct GreenLabel {
    std::uint64_t q = 0;
    unsigned n = 0;
    // Sorted by (degree, key); partitions are nonempty.
    std::vector<std::pair<FqPoly, Partition>> assignment;

    bool operator==(const GreenLabel& o) const;
};

// Sizes |mu(f)| per reciprocal orbit: the "type" of a self-dual label.
struct TypeFunction {
    std::uint64_t q = 0;
    unsigned n = 0;
    std::vector<std::pair<PolyOrbit, unsigned>> sizes; // nonzero entries only
};

struct DegreeValuation {
    unsigned v2 = 0;
    std::optional<Nat> exact_degree; // populated in the exact regime (n <= 6)
};

// The polynomial alphabet up to a degree bound, in enumeration order.
struct PolyUniverse {
    const FieldFq* field = nullptr;
    std::vector<FqPoly> polys;        // degree asc, key asc
    std::vector<PolyOrbit> orbit_list; // same order on representatives

    static PolyUniverse build(const FieldFq& field, unsigned max_degree, Budget& budget);
};

// Streams X_n once each, deterministic order.  |stream| equals the number
// of conjugacy classes of GL_n(F_q).
void enumerate_labels(const PolyUniverse& u, unsigned n, Budget& budget,
                      const std::function<void(const GreenLabel&)>& fn);

GreenLabel dual_label(const GreenLabel& mu);
bool is_self_dual(const GreenLabel& mu);

// Streams Y_n by type-function fiber: sizes per orbit first, then
// partitions per orbit.
void enumerate_self_dual(const PolyUniverse& u, unsigned n, Budget& budget,
                         const std::function<void(const GreenLabel&)>& fn);
void enumerate_type_functions(const PolyUniverse& u, unsigned n, Budget& budget,
                              const std::function<void(const TypeFunction&)>& fn);
void enumerate_fiber(const TypeFunction& t, Budget& budget,
                     const std::function<void(const GreenLabel&)>& fn);

// v2 by lifting-the-exponent; exact degree by cyclotomic-factor assembly
// when n <= 6 (consistency of the two routes is asserted there).
DegreeValuation degree_valuation(const GreenLabel& mu);

// The a*b factorization of the exact degree; requires the exact regime.
std::pair<Nat, Nat> degree_split(const GreenLabel& mu);

// v_ell(d_mu) >= v_ell(n!/prod |mu(f)|!) + sum_f v_ell(f_{mu(f)}).
// ell != 2 needs the exact regime.
bool shah_spallone_bound_check(const GreenLabel& mu, std::uint64_t ell);

// #{mu in Y_n : v2(d_mu) < v2((n)_k)} over |Y_n|.
struct Proportion {
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    double value() const { return total ? double(count) / double(total) : 0.0; }
};
Proportion divisibility_proportion(const FieldFq& field, unsigned n, unsigned k,
                                   Budget& budget);

// Counts self-dual labels meeting the sufficient valuation condition
// v2(d_mu) >= r + v2(prod_{i<n0} (q^{n-i} - 1)); such characters take
// values divisible by 2^r on the embedded GL_{n0}.
Proportion character_divisibility_bound(const FieldFq& field, unsigned n,
                                        unsigned n0, unsigned r, Budget& budget);

// |GL_n(F_q)| = prod_{i=0..n-1} (q^n - q^i).
Nat gl_order(std::uint64_t q, unsigned n);

// Degree of the unipotent character with partition lambda, base Q.
Nat unipotent_degree(const Partition& lambda, std::uint64_t Q);

// Per-(q, n) statistics row for the CSV emitter.
struct GlnStatsRow {
    std::uint64_t q = 0;
    unsigned n = 0;
    std::uint64_t count_labels = 0;    // |X_n|
    std::uint64_t count_self_dual = 0; // |Y_n|
    std::vector<std::uint64_t> v2_histogram; // over Y_n
    unsigned k = 1;
    Proportion div_proportion;
    unsigned n0 = 1, r = 1;
    Proportion char_div_census;
};

GlnStatsRow gln_stats(const FieldFq& field, unsigned n, unsigned k, unsigned n0,
                      unsigned r, Budget& budget);

void write_gln_stats_csv(std::ostream& os, const std::vector<GlnStatsRow>& rows);

} // namespace glnq
