#include "glnq/green.hpp"

#include <algorithm>
#include <map>

#include "glnq/valuations.hpp"

namespace glnq {

bool GreenLabel::operator==(const GreenLabel& o) const {
    if (q != o.q || n != o.n || assignment.size() != o.assignment.size()) return false;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        if (!(assignment[i].first == o.assignment[i].first) ||
            !(assignment[i].second == o.assignment[i].second))
            return false;
    return true;
}

PolyUniverse PolyUniverse::build(const FieldFq& field, unsigned max_degree, Budget& budget) {
    PolyUniverse u;
    u.field = &field;
    for (unsigned d = 1; d <= max_degree; ++d) {
        auto polys = irreducibles_of(field, d, budget);
        auto ob = orbits(field, d, budget);
        u.polys.insert(u.polys.end(), polys.begin(), polys.end());
        u.orbit_list.insert(u.orbit_list.end(), ob.begin(), ob.end());
    }
    return u;
}

namespace {

void validate_label(const GreenLabel& mu) {
    unsigned long long total = 0;
    for (const auto& [f, lam] : mu.assignment) {
        GLNQ_REQUIRE(!lam.empty(), "empty partitions are not stored");
        GLNQ_REQUIRE(f.constant_term() != 0, "label keys must avoid x");
        total += std::uint64_t(f.degree()) * lam.size();
    }
    GLNQ_REQUIRE(total == mu.n, "weighted size must equal n");
}

void rec_labels(const PolyUniverse& u, const GreenLabel& base, std::size_t idx,
                unsigned remaining, Budget& budget,
                const std::function<void(const GreenLabel&)>& fn) {
    if (remaining == 0) {
        budget.charge();
        fn(base);
        return;
    }
    if (idx >= u.polys.size()) return;
    const FqPoly& f = u.polys[idx];
    if (f.degree() > remaining) return; // degrees ascend; nothing further fits
    rec_labels(u, base, idx + 1, remaining, budget, fn);
    for (unsigned s = 1; s * f.degree() <= remaining; ++s) {
        enumerate_partitions(s, [&](const Partition& lam) {
            GreenLabel ext = base;
            ext.assignment.emplace_back(f, lam);
            rec_labels(u, ext, idx + 1, remaining - s * f.degree(), budget, fn);
        });
    }
}

} // namespace

void enumerate_labels(const PolyUniverse& u, unsigned n, Budget& budget,
                      const std::function<void(const GreenLabel&)>& fn) {
    GreenLabel base;
    base.q = u.field->q();
    base.n = n;
    rec_labels(u, base, 0, n, budget, fn);
}

GreenLabel dual_label(const GreenLabel& mu) {
    GreenLabel out;
    out.q = mu.q;
    out.n = mu.n;
    out.assignment = mu.assignment;
    for (auto& [f, lam] : out.assignment) f = reciprocal(f);
    std::sort(out.assignment.begin(), out.assignment.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  return poly_key(a.first) < poly_key(b.first);
              });
    return out;
}

bool is_self_dual(const GreenLabel& mu) { return mu == dual_label(mu); }

void enumerate_type_functions(const PolyUniverse& u, unsigned n, Budget& budget,
                              const std::function<void(const TypeFunction&)>& fn) {
    TypeFunction base;
    base.q = u.field->q();
    base.n = n;
    // weight of an orbit is deg * |orbit|: the partition is replicated on f and f*.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned remaining) {
        if (remaining == 0) {
            budget.charge();
            fn(base);
            return;
        }
        if (idx >= u.orbit_list.size()) return;
        const PolyOrbit& ob = u.orbit_list[idx];
        if (ob.rep.degree() > remaining) return; // degrees ascend
        unsigned w = ob.rep.degree() * ob.size;
        rec(idx + 1, remaining);
        for (unsigned m = 1; m * w <= remaining; ++m) {
            base.sizes.emplace_back(ob, m);
            rec(idx + 1, remaining - m * w);
            base.sizes.pop_back();
        }
    };
    rec(0, n);
}

void enumerate_fiber(const TypeFunction& t, Budget& budget,
                     const std::function<void(const GreenLabel&)>& fn) {
    GreenLabel base;
    base.q = t.q;
    base.n = t.n;
    std::vector<Partition> chosen(t.sizes.size());
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == t.sizes.size()) {
            GreenLabel out = base;
            for (std::size_t i = 0; i < t.sizes.size(); ++i) {
                const PolyOrbit& ob = t.sizes[i].first;
                out.assignment.emplace_back(ob.rep, chosen[i]);
                if (ob.size == 2) out.assignment.emplace_back(reciprocal(ob.rep), chosen[i]);
            }
            std::sort(out.assignment.begin(), out.assignment.end(),
                      [](const auto& a, const auto& b) {
                          if (a.first.degree() != b.first.degree())
                              return a.first.degree() < b.first.degree();
                          return poly_key(a.first) < poly_key(b.first);
                      });
            budget.charge();
            fn(out);
            return;
        }
        enumerate_partitions(t.sizes[idx].second, [&](const Partition& lam) {
            chosen[idx] = lam;
            rec(idx + 1);
        });
    };
    rec(0);
}

void enumerate_self_dual(const PolyUniverse& u, unsigned n, Budget& budget,
                         const std::function<void(const GreenLabel&)>& fn) {
    enumerate_type_functions(u, n, budget, [&](const TypeFunction& t) {
        enumerate_fiber(t, budget, fn);
    });
}

namespace {

// Cyclotomic polynomial values Phi_m(q) for m <= n, via the division chain.
std::vector<std::uint64_t> cyclotomic_values(std::uint64_t q, unsigned n) {
    std::vector<std::uint64_t> phi(n + 1, 0);
    for (unsigned m = 1; m <= n; ++m) {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < m; ++i) {
            v *= q;
            GLNQ_INTERNAL(v < (1ull << 62), "cyclotomic value overflow");
        }
        v -= 1; // q^m - 1
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) {
                GLNQ_INTERNAL(v % phi[d] == 0, "cyclotomic division chain");
                v /= phi[d];
            }
        phi[m] = v;
    }
    return phi;
}

constexpr unsigned kExactRegime = 6;

} // namespace

Nat gl_order(std::uint64_t q, unsigned n) {
    Nat qn = Nat::power(q, n);
    Nat order(1);
    for (unsigned i = 0; i < n; ++i) order *= qn - Nat::power(q, i);
    return order;
}

Nat unipotent_degree(const Partition& lambda, std::uint64_t Q) {
    unsigned n = lambda.size();
    auto phi = cyclotomic_values(Q, n);
    std::vector<long long> e(n + 1, 0);
    for (unsigned m = 1; m <= n; ++m) e[m] = n / m;
    for (unsigned h : hooks(lambda).lengths)
        for (unsigned m = 1; m <= h; ++m)
            if (h % m == 0) --e[m];
    Nat d = Nat::power(Q, static_cast<unsigned>(alpha(lambda)));
    for (unsigned m = 1; m <= n; ++m) {
        GLNQ_INTERNAL(e[m] >= 0, "unipotent degree must be a polynomial in q");
        for (long long i = 0; i < e[m]; ++i) d.mul_small(phi[m]);
    }
    return d;
}

DegreeValuation degree_valuation(const GreenLabel& mu) {
    validate_label(mu);
    DegreeValuation out;
    long long v = v2_psi(mu.q, mu.n);
    for (const auto& [f, lam] : mu.assignment)
        v -= v2_H_denominator(lam, mu.q, f.degree());
    GLNQ_INTERNAL(v >= 0, "degree valuation must be nonnegative");
    out.v2 = static_cast<unsigned>(v);

    if (mu.n <= kExactRegime) {
        // d_mu = q^A * prod_m Phi_m(q)^{e_m} with
        // e_m = #{i<=n : m|i} - #{(f,h) : m | deg(f)|h|}; all e_m >= 0.
        auto phi = cyclotomic_values(mu.q, mu.n);
        std::vector<long long> e(mu.n + 1, 0);
        for (unsigned m = 1; m <= mu.n; ++m) e[m] = mu.n / m;
        unsigned long long A = 0;
        for (const auto& [f, lam] : mu.assignment) {
            A += std::uint64_t(f.degree()) * alpha(lam);
            for (unsigned h : hooks(lam).lengths) {
                unsigned dh = f.degree() * h;
                GLNQ_INTERNAL(dh <= mu.n, "hook weight exceeds n");
                for (unsigned m = 1; m <= dh; ++m)
                    if (dh % m == 0) --e[m];
            }
        }
        Nat d = Nat::power(mu.q, static_cast<unsigned>(A));
        for (unsigned m = 1; m <= mu.n; ++m) {
            GLNQ_INTERNAL(e[m] >= 0, "degree must be a polynomial in q");
            for (long long i = 0; i < e[m]; ++i) d.mul_small(phi[m]);
        }
        GLNQ_INTERNAL(d.v2() == out.v2, "valuation route disagrees with exact degree");
        out.exact_degree = std::move(d);
    }
    return out;
}

std::pair<Nat, Nat> degree_split(const GreenLabel& mu) {
    validate_label(mu);
    GLNQ_REQUIRE(mu.n <= kExactRegime, "degree_split needs the exact regime");
    auto phi = cyclotomic_values(mu.q, mu.n);
    // a = psi_n(q) / prod_f prod_{i<=|mu(f)|} (q^{deg f * i} - 1)
    std::vector<long long> ea(mu.n + 1, 0);
    for (unsigned m = 1; m <= mu.n; ++m) ea[m] = mu.n / m;
    for (const auto& [f, lam] : mu.assignment)
        for (unsigned i = 1; i <= lam.size(); ++i) {
            unsigned di = f.degree() * i;
            GLNQ_INTERNAL(di <= mu.n, "partition weight exceeds n");
            for (unsigned m = 1; m <= di; ++m)
                if (di % m == 0) --ea[m];
        }
    Nat a(1);
    for (unsigned m = 1; m <= mu.n; ++m) {
        GLNQ_INTERNAL(ea[m] >= 0, "a-part must be a polynomial in q");
        for (long long i = 0; i < ea[m]; ++i) a.mul_small(phi[m]);
    }
    // b = prod_f d_{mu(f)}(q^{deg f})
    Nat b(1);
    for (const auto& [f, lam] : mu.assignment) {
        std::uint64_t Q = 1;
        for (unsigned i = 0; i < f.degree(); ++i) Q *= mu.q;
        b *= unipotent_degree(lam, Q);
    }
    auto dv = degree_valuation(mu);
    GLNQ_INTERNAL(dv.exact_degree && a * b == *dv.exact_degree,
                  "a*b must reproduce the degree");
    return {std::move(a), std::move(b)};
}

bool shah_spallone_bound_check(const GreenLabel& mu, std::uint64_t ell) {
    validate_label(mu);
    long long rhs = v_factorial(ell, mu.n);
    for (const auto& [f, lam] : mu.assignment) {
        rhs -= v_factorial(ell, lam.size());
        rhs += v_specht(ell, lam);
    }
    long long lhs;
    if (ell == 2) {
        lhs = degree_valuation(mu).v2;
    } else {
        GLNQ_REQUIRE(mu.n <= kExactRegime, "odd ell needs the exact regime");
        auto dv = degree_valuation(mu);
        lhs = dv.exact_degree->valuation(ell);
    }
    return lhs >= rhs;
}

Proportion divisibility_proportion(const FieldFq& field, unsigned n, unsigned k,
                                   Budget& budget) {
    GLNQ_REQUIRE(k <= n, "k must not exceed n");
    unsigned threshold = v_falling(2, n, k);
    PolyUniverse u = PolyUniverse::build(field, n, budget);
    Proportion p;
    enumerate_self_dual(u, n, budget, [&](const GreenLabel& mu) {
        ++p.total;
        if (degree_valuation(mu).v2 < threshold) ++p.count;
    });
    return p;
}

Proportion character_divisibility_bound(const FieldFq& field, unsigned n,
                                        unsigned n0, unsigned r, Budget& budget) {
    GLNQ_REQUIRE(n0 >= 1 && n0 <= n, "need 1 <= n0 <= n");
    unsigned threshold = r;
    for (unsigned i = 0; i < n0; ++i) threshold += v2_qpow_minus_one(field.q(), n - i);
    PolyUniverse u = PolyUniverse::build(field, n, budget);
    Proportion p;
    enumerate_self_dual(u, n, budget, [&](const GreenLabel& mu) {
        ++p.total;
        if (r == 0 || degree_valuation(mu).v2 >= threshold) ++p.count;
    });
    return p;
}

GlnStatsRow gln_stats(const FieldFq& field, unsigned n, unsigned k, unsigned n0,
                      unsigned r, Budget& budget) {
    GlnStatsRow row;
    row.q = field.q();
    row.n = n;
    row.k = k;
    row.n0 = n0;
    row.r = r;
    PolyUniverse u = PolyUniverse::build(field, n, budget);
    enumerate_labels(u, n, budget, [&](const GreenLabel&) { ++row.count_labels; });
    unsigned div_threshold = v_falling(2, n, k);
    unsigned char_threshold = r;
    for (unsigned i = 0; i < n0; ++i) char_threshold += v2_qpow_minus_one(field.q(), n - i);
    enumerate_self_dual(u, n, budget, [&](const GreenLabel& mu) {
        ++row.count_self_dual;
        unsigned v = degree_valuation(mu).v2;
        if (row.v2_histogram.size() <= v) row.v2_histogram.resize(v + 1, 0);
        ++row.v2_histogram[v];
        ++row.div_proportion.total;
        if (v < div_threshold) ++row.div_proportion.count;
        ++row.char_div_census.total;
        if (r == 0 || v >= char_threshold) ++row.char_div_census.count;
    });
    return row;
}

void write_gln_stats_csv(std::ostream& os, const std::vector<GlnStatsRow>& rows) {
    os << "q,n,labels,self_dual,v2_histogram,k,div_below,div_total,n0,r,"
          "char_div_guaranteed,char_div_total\n";
    for (const auto& r : rows) {
        os << r.q << ',' << r.n << ',' << r.count_labels << ',' << r.count_self_dual << ',';
        for (std::size_t v = 0; v < r.v2_histogram.size(); ++v) {
            if (v) os << '|';
            os << v << ':' << r.v2_histogram[v];
        }
        os << ',' << r.k << ',' << r.div_proportion.count << ',' << r.div_proportion.total
           << ',' << r.n0 << ',' << r.r << ',' << r.char_div_census.count << ','
           << r.char_div_census.total << '\n';
    }
}

} // namespace glnq
