#include "glnq/gl2.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "glnq/check.hpp"

namespace glnq::gl2 {

namespace {

// chi_j(-1) = (-1)^j against a fixed generator of a cyclic group of even order.
int sign_at_minus_one(std::uint64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_odd_q(std::uint64_t q) {
    GLNQ_REQUIRE(q >= 3 && q % 2 == 1, "q must be an odd prime power");
}

bool binom2_even(std::uint64_t m) {
    // C(m,2) = m(m-1)/2 is even iff m = 0,1 mod 4.
    return m % 4 <= 1;
}

} // namespace

Family family_of(const Gl2Rep& rep) {
    if (std::holds_alternative<OneDim>(rep)) return Family::one_dim;
    if (std::holds_alternative<PrincipalSeries>(rep)) return Family::principal_series;
    if (std::holds_alternative<SteinbergTwist>(rep)) return Family::steinberg;
    return Family::cuspidal;
}

std::uint64_t dimension(std::uint64_t q, const Gl2Rep& rep) {
    switch (family_of(rep)) {
        case Family::one_dim: return 1;
        case Family::principal_series: return q + 1;
        case Family::steinberg: return q;
        case Family::cuspidal: return q - 1;
    }
    return 0;
}

bool rep_self_dual(std::uint64_t q, const Gl2Rep& rep) {
    std::uint64_t N = q - 1;
    if (const auto* od = std::get_if<OneDim>(&rep)) return (2 * od->psi) % N == 0;
    if (const auto* ps = std::get_if<PrincipalSeries>(&rep)) {
        std::uint64_t i1 = (N - ps->chi1 % N) % N, i2 = (N - ps->chi2 % N) % N;
        return (ps->chi1 == i1 && ps->chi2 == i2) || (ps->chi1 == i2 && ps->chi2 == i1);
    }
    if (const auto* st = std::get_if<SteinbergTwist>(&rep)) return (2 * st->psi) % N == 0;
    const auto& c = std::get<Cuspidal>(rep);
    std::uint64_t N2 = q * q - 1;
    return (c.theta * (q + 1)) % N2 == 0; // theta^q = theta^-1
}

Subcase subcase_of(std::uint64_t q, const Gl2Rep& rep) {
    std::uint64_t N = q - 1;
    switch (family_of(rep)) {
        case Family::one_dim:
            return std::get<OneDim>(rep).psi % N == 0 ? Subcase::one_dim_trivial
                                                      : Subcase::one_dim_quadratic;
        case Family::principal_series: {
            const auto& ps = std::get<PrincipalSeries>(rep);
            if ((2 * ps.chi1) % N == 0 && (2 * ps.chi2) % N == 0)
                return Subcase::ps_one_quadratic;
            return sign_at_minus_one(ps.chi1) == 1 ? Subcase::ps_pair_plus
                                                   : Subcase::ps_pair_minus;
        }
        case Family::steinberg:
            return std::get<SteinbergTwist>(rep).psi % N == 0 ? Subcase::steinberg_trivial
                                                              : Subcase::steinberg_quadratic;
        case Family::cuspidal: return Subcase::cuspidal;
    }
    return Subcase::cuspidal;
}

std::string subcase_name(Subcase s) {
    switch (s) {
        case Subcase::one_dim_trivial: return "one_dim_trivial";
        case Subcase::one_dim_quadratic: return "one_dim_quadratic";
        case Subcase::ps_pair_plus: return "ps_pair_chi_plus";
        case Subcase::ps_pair_minus: return "ps_pair_chi_minus";
        case Subcase::ps_one_quadratic: return "ps_one_quadratic";
        case Subcase::steinberg_trivial: return "steinberg_trivial";
        case Subcase::steinberg_quadratic: return "steinberg_quadratic";
        case Subcase::cuspidal: return "cuspidal";
    }
    return "?";
}

void enumerate_self_dual_reps(std::uint64_t q, const std::function<void(const Gl2Rep&)>& fn) {
    require_odd_q(q);
    std::uint64_t N = q - 1, half = N / 2;
    // one-dimensional: psi^2 = 1
    fn(OneDim{0});
    fn(OneDim{half});
    // the self-dual pair of distinct quadratic characters {1, mu}
    fn(PrincipalSeries{0, half});
    // inverse pairs {chi, chi^-1}, chi^2 != 1; canonical chi1 < chi2
    for (std::uint64_t j = 1; 2 * j < N; ++j)
        if (j != half) fn(PrincipalSeries{j, N - j});
    // Steinberg twists with psi^2 = 1
    fn(SteinbergTwist{0});
    fn(SteinbergTwist{half});
    // cuspidal: theta = (q-1)s on F_{q^2}^x, s in Z/(q+1), theta^2 != 1,
    // modulo s ~ -s; regular automatically.
    for (std::uint64_t s = 1; 2 * s < q + 1; ++s) fn(Cuspidal{(q - 1) * s});
}

std::vector<Gl2Rep> self_dual_reps(std::uint64_t q) {
    std::vector<Gl2Rep> out;
    out.reserve(q + 3);
    enumerate_self_dual_reps(q, [&](const Gl2Rep& r) { out.push_back(r); });
    GLNQ_INTERNAL(out.size() == q + 3, "self-dual census must be q + 3");
    return out;
}

std::pair<std::int64_t, std::int64_t> char_at_involutions(std::uint64_t q, const Gl2Rep& rep) {
    require_odd_q(q);
    switch (family_of(rep)) {
        case Family::one_dim: {
            int s = sign_at_minus_one(std::get<OneDim>(rep).psi);
            return {s, 1};
        }
        case Family::principal_series: {
            const auto& ps = std::get<PrincipalSeries>(rep);
            int s1 = sign_at_minus_one(ps.chi1), s2 = sign_at_minus_one(ps.chi2);
            return {s1 + s2, static_cast<std::int64_t>(q + 1) * s1 * s2};
        }
        case Family::steinberg: {
            // chi_St(h1) = 1 (h1 fixes two points of P^1), so the twist
            // contributes psi(-1); the central value is q.
            int s = sign_at_minus_one(std::get<SteinbergTwist>(rep).psi);
            return {s, static_cast<std::int64_t>(q)};
        }
        case Family::cuspidal: {
            // h1 is split regular: cuspidal characters vanish there.
            int s = sign_at_minus_one(std::get<Cuspidal>(rep).theta);
            return {0, static_cast<std::int64_t>(q - 1) * s};
        }
    }
    return {0, 0};
}

SwDecision sw_decision(std::uint64_t q, const Gl2Rep& rep, const OracleHints& hints) {
    require_odd_q(q);
    GLNQ_REQUIRE(rep_self_dual(q, rep), "sw_decision needs a self-dual representation");
    SwDecision d;
    auto [h1, h2] = char_at_involutions(q, rep);
    d.chi_h1 = h1;
    d.chi_h2 = h2;
    std::int64_t dim = static_cast<std::int64_t>(dimension(q, rep));
    GLNQ_INTERNAL((dim - h1) % 2 == 0 && dim >= h1, "m_pi must be a nonnegative integer");
    d.m_pi = static_cast<std::uint64_t>((dim - h1) / 2);

    if (q % 4 == 1) {
        d.w2_trivial = d.m_pi % 4 == 0;
        GLNQ_INTERNAL(d.m_pi % 2 == 0, "m_pi is even when q = 1 mod 4");
        GLNQ_INTERNAL(dim - h2 == 0, "dim - chi(h2) vanishes for self-dual reps");
        bool second_even = ((dim - h2) / 8) % 2 == 0;
        d.w4_trivial = binom2_even(d.m_pi / 2) && second_even;
    } else {
        d.w2_trivial = binom2_even(d.m_pi);
        d.w4_trivial = std::nullopt;
    }

    std::uint64_t half = (q - 1) / 2;
    switch (family_of(rep)) {
        case Family::one_dim:
            d.w1_trivial = std::get<OneDim>(rep).psi % (q - 1) == 0 ? Tri::yes : Tri::no;
            break;
        case Family::principal_series:
            d.w1_trivial = Tri::no; // det = mu o det, always nontrivial
            break;
        case Family::steinberg:
            // det = (mu psi) o det, trivial iff psi is the quadratic character
            d.w1_trivial = std::get<SteinbergTwist>(rep).psi % (q - 1) == half ? Tri::yes : Tri::no;
            break;
        case Family::cuspidal:
            if (hints.cuspidal_det_trivial)
                d.w1_trivial = *hints.cuspidal_det_trivial ? Tri::yes : Tri::no;
            else
                d.w1_trivial = Tri::unknown;
            break;
    }
    return d;
}

namespace {

struct RefCell {
    bool covered = false;
    bool w2 = false;
    std::optional<bool> w4;
};

// The reference summary table: per-subcase congruence conditions on q.
RefCell reference_cell(std::uint64_t q, Subcase s) {
    RefCell c;
    bool q1mod4 = q % 4 == 1;
    switch (s) {
        case Subcase::one_dim_trivial:
        case Subcase::one_dim_quadratic:
            c.covered = true;
            c.w2 = true;
            if (q1mod4) c.w4 = true;
            return c;
        case Subcase::ps_pair_plus:
            c.covered = true;
            c.w2 = q1mod4 ? q % 8 == 1 : q % 8 == 3;
            if (q1mod4) c.w4 = q % 16 == 1;
            return c;
        case Subcase::ps_pair_minus:
            c.covered = true;
            c.w2 = q1mod4 ? q % 8 == 5 : q % 8 == 7;
            if (q1mod4) c.w4 = q % 16 == 13;
            return c;
        case Subcase::ps_one_quadratic:
            c.covered = false; // absent from the reference table
            return c;
        case Subcase::steinberg_trivial:
            c.covered = q1mod4; // the q = 3 mod 4 block lists only psi != 1
            if (q1mod4) {
                c.w2 = q % 8 == 1;
                c.w4 = q % 16 == 1;
            }
            return c;
        case Subcase::steinberg_quadratic:
            c.covered = true;
            c.w2 = q1mod4 ? q % 8 == 1 : q % 8 == 7;
            if (q1mod4) c.w4 = q % 16 == 1;
            return c;
        case Subcase::cuspidal:
            c.covered = true;
            c.w2 = q1mod4 ? q % 8 == 1 : false;
            if (q1mod4) c.w4 = q % 16 == 1;
            return c;
    }
    return c;
}

constexpr Subcase kAllSubcases[] = {
    Subcase::one_dim_trivial,    Subcase::one_dim_quadratic, Subcase::ps_pair_plus,
    Subcase::ps_pair_minus,      Subcase::ps_one_quadratic,  Subcase::steinberg_trivial,
    Subcase::steinberg_quadratic, Subcase::cuspidal,
};

} // namespace

// m_pi as a function of the subcase alone, so empty buckets (e.g. the plus
// pairs at q = 3) still render a verdict.
std::uint64_t subcase_m_pi(std::uint64_t q, Subcase s) {
    bool q1mod4 = q % 4 == 1;
    switch (s) {
        case Subcase::one_dim_trivial: return 0;
        case Subcase::one_dim_quadratic: return q1mod4 ? 0 : 1;
        case Subcase::ps_pair_plus: return (q - 1) / 2;
        case Subcase::ps_pair_minus: return (q + 3) / 2;
        case Subcase::ps_one_quadratic: return q1mod4 ? (q - 1) / 2 : (q + 1) / 2;
        case Subcase::steinberg_trivial: return (q - 1) / 2;
        case Subcase::steinberg_quadratic: return q1mod4 ? (q - 1) / 2 : (q + 1) / 2;
        case Subcase::cuspidal: return (q - 1) / 2;
    }
    return 0;
}

namespace {

Tri subcase_w1(Subcase s, const OracleHints& hints) {
    switch (s) {
        case Subcase::one_dim_trivial: return Tri::yes;
        case Subcase::one_dim_quadratic: return Tri::no;
        case Subcase::ps_pair_plus:
        case Subcase::ps_pair_minus:
        case Subcase::ps_one_quadratic: return Tri::no;
        case Subcase::steinberg_trivial: return Tri::no;
        case Subcase::steinberg_quadratic: return Tri::yes;
        case Subcase::cuspidal:
            if (hints.cuspidal_det_trivial)
                return *hints.cuspidal_det_trivial ? Tri::yes : Tri::no;
            return Tri::unknown;
    }
    return Tri::unknown;
}

} // namespace

std::vector<TableRow> summary_table(std::uint64_t q, const OracleHints& hints) {
    require_odd_q(q);
    std::vector<TableRow> rows;
    for (Subcase s : kAllSubcases) {
        TableRow row;
        row.subcase = s;
        std::uint64_t m = subcase_m_pi(q, s);
        if (q % 4 == 1) {
            row.w2 = m % 4 == 0;
            row.w4 = binom2_even(m / 2);
        } else {
            row.w2 = binom2_even(m);
        }
        row.w1 = subcase_w1(s, hints);
        rows.push_back(row);
    }
    auto row_of = [&](Subcase s) -> TableRow& {
        return rows[static_cast<std::size_t>(
            std::find(std::begin(kAllSubcases), std::end(kAllSubcases), s) -
            std::begin(kAllSubcases))];
    };
    enumerate_self_dual_reps(q, [&](const Gl2Rep& rep) {
        SwDecision d = sw_decision(q, rep, hints);
        TableRow& row = row_of(subcase_of(q, rep));
        GLNQ_INTERNAL(row.w2 == d.w2_trivial && row.w4 == d.w4_trivial &&
                          row.w1 == d.w1_trivial,
                      "verdicts must be uniform within a subcase");
        ++row.count;
    });
    for (TableRow& row : rows) {
        RefCell ref = reference_cell(q, row.subcase);
        row.covered = ref.covered;
        if (ref.covered) {
            row.ref_w2 = ref.w2;
            row.ref_w4 = ref.w4;
            // Rows with no representation make no claim, so they always match.
            if (row.count > 0) {
                row.match_w2 = row.w2 == ref.w2;
                row.match_w4 = !ref.w4.has_value() || row.w4 == ref.w4;
            }
        }
    }
    return rows;
}

namespace {

std::uint64_t reference_w2_zero_count(std::uint64_t q) {
    switch (q % 8) {
        case 1: return q + 3;        // every orthogonal representation
        case 3: return (q + 5) / 4;  // one-dims + PS pairs with chi(-1) = 1
        case 5: return (q - 1) / 4;  // PS pairs with chi(-1) = -1
        default: return 1;           // the quadratic Steinberg twist
    }
}

} // namespace

DensityRecord density(std::uint64_t q) {
    require_odd_q(q);
    DensityRecord rec;
    rec.q = q;
    rec.residue_mod_8 = static_cast<unsigned>(q % 8);
    rec.family_census = q + 2;
    rec.count_w2_zero_ref = reference_w2_zero_count(q);
    enumerate_self_dual_reps(q, [&](const Gl2Rep& rep) {
        ++rec.total_orthogonal;
        if (sw_decision(q, rep).w2_trivial) ++rec.count_w2_zero;
    });
    GLNQ_INTERNAL(rec.total_orthogonal == q + 3, "census must be q + 3");
    return rec;
}

std::vector<std::uint64_t> prime_powers(std::uint64_t X, std::optional<unsigned> residue_mod_8) {
    GLNQ_REQUIRE(X >= 3, "X must be at least 3");
    std::vector<bool> sieve(X + 1, true);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= X; ++p) {
        if (!sieve[p]) continue;
        for (std::uint64_t m = p * p; m <= X; m += p) sieve[m] = false;
        if (p == 2) continue;
        for (std::uint64_t pk = p; pk <= X; pk *= p) {
            out.push_back(pk);
            if (pk > X / p) break;
        }
    }
    std::sort(out.begin(), out.end());
    if (residue_mod_8) {
        std::erase_if(out, [&](std::uint64_t q) { return q % 8 != *residue_mod_8; });
    }
    return out;
}

std::vector<DensityRecord> density_records(std::uint64_t X, unsigned jobs) {
    auto qs = prime_powers(X);
    std::vector<DensityRecord> recs(qs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < qs.size(); ++i) recs[i] = density(qs[i]);
        return recs;
    }
    // Independent per-q work items; the output slot is indexed, so the
    // result does not depend on scheduling.
    std::vector<std::future<void>> futures;
    std::size_t chunk = (qs.size() + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        std::size_t lo = t * chunk, hi = std::min(qs.size(), lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) recs[i] = density(qs[i]);
        }));
    }
    for (auto& f : futures) f.get();
    return recs;
}

DensitySummary global_average(std::uint64_t X, unsigned jobs) {
    DensitySummary s;
    for (const DensityRecord& r : density_records(X, jobs)) {
        unsigned slot = DensitySummary::slot(r.residue_mod_8);
        for (unsigned i : {slot, 4u}) {
            s.w2_zero[i] += r.count_w2_zero;
            s.w2_zero_ref[i] += r.count_w2_zero_ref;
            s.total[i] += r.total_orthogonal;
        }
    }
    return s;
}

} // namespace glnq::gl2
