#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace glnq::gl2 {

/* Self-dual irreducibles of GL_2(F_q) by family, their character values at
 * the order-2 test elements h1 = diag(-1,1) and h2 = -I, and the
 * Stiefel-Whitney vanishing decisions via the m_pi congruence criterion.
 *
 * Characters of F_q^x and F_{q^2}^x are integer exponents against fixed
 * generators, so chi(-1) = (-1)^exponent throughout. */

struct OneDim { std::uint64_t psi; };                       // exponent mod q-1
struct PrincipalSeries { std::uint64_t chi1, chi2; };       // chi1 < chi2, distinct
struct SteinbergTwist { std::uint64_t psi; };               // exponent mod q-1
struct Cuspidal { std::uint64_t theta; };                   // exponent mod q^2-1, min of {t, tq}

using Gl2Rep = std::variant<OneDim, PrincipalSeries, SteinbergTwist, Cuspidal>;

enum class Family { one_dim, principal_series, steinberg, cuspidal };
Family family_of(const Gl2Rep& rep);
std::uint64_t dimension(std::uint64_t q, const Gl2Rep& rep);
bool rep_self_dual(std::uint64_t q, const Gl2Rep& rep);

// Finer bucket used by the summary table.
enum class Subcase {
    one_dim_trivial,
    one_dim_quadratic,
    ps_pair_plus,      // {chi, chi^-1}, chi(-1) = +1
    ps_pair_minus,     // {chi, chi^-1}, chi(-1) = -1
    ps_one_quadratic,  // {1, quadratic}: outside the reference table
    steinberg_trivial,
    steinberg_quadratic,
    cuspidal,
};
Subcase subcase_of(std::uint64_t q, const Gl2Rep& rep);
std::string subcase_name(Subcase s);
// m_pi is constant on a subcase; this is the value, rep or no rep.
std::uint64_t subcase_m_pi(std::uint64_t q, Subcase s);

// All q + 3 self-dual irreducibles, deterministic order.
void enumerate_self_dual_reps(std::uint64_t q, const std::function<void(const Gl2Rep&)>& fn);
std::vector<Gl2Rep> self_dual_reps(std::uint64_t q);

// (chi(h1), chi(h2)); accepts arbitrary family parameters so the
// brute-force verifier can cross-check non-self-dual characters too.
std::pair<std::int64_t, std::int64_t> char_at_involutions(std::uint64_t q, const Gl2Rep& rep);

enum class Tri { no, yes, unknown };

struct SwDecision {
    Tri w1_trivial = Tri::unknown;
    bool w2_trivial = false;
    std::optional<bool> w4_trivial; // only for q = 1 mod 4
    std::uint64_t m_pi = 0;
    std::int64_t chi_h1 = 0;
    std::int64_t chi_h2 = 0;
};

// Supplementary facts the brute-force verifier can supply at tiny q.
struct OracleHints {
    // det of self-dual cuspidals evaluated at t_x (x a nonsquare): the w1 answer.
    std::optional<bool> cuspidal_det_trivial;
};

// w2: q=1 mod 4: m_pi = 0 mod 4;  q=3 mod 4: C(m_pi,2) even, i.e. m_pi = 0,1 mod 4.
// w4 (q=1 mod 4 only): C(m_pi/2,2) even and (dim-chi(h2))/8 even; the second
// numerator is asserted to vanish for every self-dual family.
SwDecision sw_decision(std::uint64_t q, const Gl2Rep& rep, const OracleHints& hints = {});

// One row per (family, subcase) with computed verdicts and, where the
// reference summary table covers the subcase, the expected booleans.
struct TableRow {
    Subcase subcase;
    std::uint64_t count = 0;    // representations in the bucket at this q
    Tri w1 = Tri::unknown;
    bool w2 = false;
    std::optional<bool> w4;
    bool covered = false;       // present in the reference table
    std::optional<bool> ref_w2; // expected, when covered
    std::optional<bool> ref_w4;
    bool match_w2 = true;
    bool match_w4 = true;
};

std::vector<TableRow> summary_table(std::uint64_t q, const OracleHints& hints = {});

struct DensityRecord {
    std::uint64_t q = 0;
    unsigned residue_mod_8 = 0;
    std::uint64_t total_orthogonal = 0;   // q + 3 (brute-force census)
    std::uint64_t family_census = 0;      // q + 2: the per-family count that
                                          // omits the {1, quadratic} pair
    std::uint64_t count_w2_zero = 0;      // decided by sw_decision
    std::uint64_t count_w2_zero_ref = 0;  // the reference closed forms
};

DensityRecord density(std::uint64_t q);

// Odd prime powers <= X, ascending; optional residue class mod 8.
std::vector<std::uint64_t> prime_powers(std::uint64_t X,
                                        std::optional<unsigned> residue_mod_8 = {});

struct DensitySummary {
    // indexes 0..3 <-> residues 1,3,5,7; 4 = global
    std::uint64_t w2_zero[5] = {0, 0, 0, 0, 0};
    std::uint64_t w2_zero_ref[5] = {0, 0, 0, 0, 0};
    std::uint64_t total[5] = {0, 0, 0, 0, 0};
    static unsigned slot(unsigned residue) { return (residue - 1) / 2; }
    double ratio(unsigned i) const { return total[i] ? double(w2_zero[i]) / double(total[i]) : 0.0; }
    double ratio_ref(unsigned i) const { return total[i] ? double(w2_zero_ref[i]) / double(total[i]) : 0.0; }
};

// Aggregates density records over all odd prime powers <= X.  jobs > 1
// splits the q list; the merge is associative so the result is identical.
DensitySummary global_average(std::uint64_t X, unsigned jobs = 1);

std::vector<DensityRecord> density_records(std::uint64_t X, unsigned jobs = 1);

} // namespace glnq::gl2
