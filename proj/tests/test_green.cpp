#include <doctest.h>

#include <algorithm>
#include <map>

#include "glnq/green.hpp"
#include "glnq/valuations.hpp"

using namespace glnq;

namespace {

Budget big_budget() { return Budget{1ull << 30}; }

// Independent count of |X_n|: coefficient of t^n in prod_d P(t^d)^{N_d},
// where P is the partition generating function and N_d the irreducible count.
std::uint64_t class_count_gf(std::uint64_t q, unsigned n) {
    std::vector<std::uint64_t> series(n + 1, 0);
    series[0] = 1;
    std::vector<std::uint64_t> pcount(n + 1);
    for (unsigned m = 0; m <= n; ++m) pcount[m] = partition_count(m).as_u64();
    for (unsigned d = 1; d <= n; ++d) {
        std::uint64_t Nd = irreducible_count(q, d);
        for (std::uint64_t rep = 0; rep < Nd; ++rep) {
            std::vector<std::uint64_t> next(n + 1, 0);
            for (unsigned a = 0; a <= n; ++a) {
                if (!series[a]) continue;
                for (unsigned s = 0; a + d * s <= n; ++s)
                    next[a + d * s] += series[a] * pcount[s];
            }
            series = std::move(next);
        }
    }
    return series[n];
}

// Same for |Y_n|: one partition per orbit, weight deg * |orbit|.
std::uint64_t self_dual_count_gf(const FieldFq& field, unsigned n) {
    std::vector<std::uint64_t> series(n + 1, 0);
    series[0] = 1;
    std::vector<std::uint64_t> pcount(n + 1);
    for (unsigned m = 0; m <= n; ++m) pcount[m] = partition_count(m).as_u64();
    Budget b = big_budget();
    for (unsigned d = 1; d <= n; ++d)
        for (const PolyOrbit& ob : orbits(field, d, b)) {
            unsigned w = d * ob.size;
            std::vector<std::uint64_t> next(n + 1, 0);
            for (unsigned a = 0; a <= n; ++a) {
                if (!series[a]) continue;
                for (unsigned s = 0; a + w * s <= n; ++s)
                    next[a + w * s] += series[a] * pcount[s];
            }
            series = std::move(next);
        }
    return series[n];
}

GreenLabel single_label(const FieldFq& field, unsigned n, const FqPoly& f,
                        std::vector<unsigned> parts) {
    GreenLabel mu;
    mu.q = field.q();
    mu.n = n;
    mu.assignment.emplace_back(f, Partition(std::move(parts)));
    return mu;
}

FqPoly linear(const FieldFq& field, unsigned root) {
    return FqPoly{&field, {field.neg(root), 1}};
}

} // namespace

TEST_CASE("label enumeration counts") {
    // |X_1| = q - 1, |X_2| = q^2 - 1, and the generating-function oracle
    for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
        FieldFq field = FieldFq::from_q(q);
        Budget b = big_budget();
        PolyUniverse u = PolyUniverse::build(field, 4, b);
        for (unsigned n = 1; n <= 4; ++n) {
            std::uint64_t count = 0;
            enumerate_labels(u, n, b, [&](const GreenLabel& mu) {
                CHECK(mu.n == n);
                ++count;
            });
            CHECK(count == class_count_gf(q, n));
            if (n == 1) CHECK(count == q - 1);
            if (n == 2) CHECK(count == q * q - 1);
        }
    }
    // GL_3(F_3) has q^3 - q = 24 classes
    CHECK(class_count_gf(3, 3) == 24);
}

TEST_CASE("duality") {
    FieldFq f5(5, 1);
    Budget b = big_budget();
    // (x-2 -> (1)) maps to (x-3 -> (1)): 2 * 3 = 1 in F_5
    GreenLabel mu = single_label(f5, 1, linear(f5, 2), {1});
    GreenLabel nu = dual_label(mu);
    REQUIRE(nu.assignment.size() == 1);
    CHECK(nu.assignment[0].first == linear(f5, 3));
    CHECK(!is_self_dual(mu));

    GreenLabel uni = single_label(f5, 3, linear(f5, 1), {2, 1});
    CHECK(is_self_dual(uni));

    // double application is the identity across X_3 over F_3
    FieldFq f3(3, 1);
    PolyUniverse u3 = PolyUniverse::build(f3, 3, b);
    enumerate_labels(u3, 3, b, [&](const GreenLabel& lab) {
        CHECK(dual_label(dual_label(lab)) == lab);
        CHECK(is_self_dual(dual_label(lab)) == is_self_dual(lab));
        // duality preserves the degree data exactly
        auto d1 = degree_valuation(lab), d2 = degree_valuation(dual_label(lab));
        CHECK(d1.v2 == d2.v2);
        CHECK(*d1.exact_degree == *d2.exact_degree);
    });
}

TEST_CASE("self-dual enumeration") {
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
        FieldFq field = FieldFq::from_q(q);
        Budget b = big_budget();
        PolyUniverse u = PolyUniverse::build(field, 2, b);
        std::uint64_t count = 0;
        enumerate_self_dual(u, 2, b, [&](const GreenLabel& mu) {
            CHECK(is_self_dual(mu));
            ++count;
        });
        CHECK(count == q + 3);
        CHECK(count == self_dual_count_gf(field, 2));
        // n = 1: x-1 and x+1 with partition (1)
        std::uint64_t c1 = 0;
        enumerate_self_dual(u, 1, b, [&](const GreenLabel&) { ++c1; });
        CHECK(c1 == 2);
    }
    // the fibered enumeration agrees with filtering the full stream
    FieldFq f3(3, 1);
    Budget b = big_budget();
    PolyUniverse u = PolyUniverse::build(f3, 4, b);
    for (unsigned n = 1; n <= 4; ++n) {
        std::uint64_t filtered = 0, fibered = 0;
        enumerate_labels(u, n, b, [&](const GreenLabel& mu) {
            if (is_self_dual(mu)) ++filtered;
        });
        enumerate_self_dual(u, n, b, [&](const GreenLabel&) { ++fibered; });
        CHECK(filtered == fibered);
        CHECK(fibered == self_dual_count_gf(f3, n));
    }
}

TEST_CASE("degrees: unipotent and small families") {
    FieldFq f3(3, 1);
    // x-1 -> (n): the trivial character
    for (unsigned n = 1; n <= 5; ++n) {
        std::vector<unsigned> row{n};
        auto dv = degree_valuation(single_label(f3, n, linear(f3, 1), row));
        CHECK(*dv.exact_degree == Nat(1));
        CHECK(dv.v2 == 0);
    }
    // x-1 -> (1,1): degree q
    auto st = degree_valuation(single_label(f3, 2, linear(f3, 1), {1, 1}));
    CHECK(*st.exact_degree == Nat(3));
    CHECK(st.v2 == 0);
    // degree-2 self-reciprocal poly -> (1): degree q - 1
    FqPoly x2p1{&f3, {1, 0, 1}};
    auto cusp = degree_valuation(single_label(f3, 2, x2p1, {1}));
    CHECK(*cusp.exact_degree == Nat(2));
    CHECK(cusp.v2 == 1);

    // unipotent degree polynomial: (1,1) gives q, (2,1) gives q(q+1)
    CHECK(unipotent_degree(Partition({1, 1}), 3) == Nat(3));
    CHECK(unipotent_degree(Partition({2, 1}), 3) == Nat(12));
}

TEST_CASE("sum of squared degrees equals the group order") {
    for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {3, 3}}) {
        FieldFq field = FieldFq::from_q(q);
        Budget b = big_budget();
        PolyUniverse u = PolyUniverse::build(field, n, b);
        Nat sum(0);
        enumerate_labels(u, n, b, [&](const GreenLabel& mu) {
            Nat d = *degree_valuation(mu).exact_degree;
            sum += d * d;
        });
        CHECK(sum == gl_order(q, n));
    }
}

TEST_CASE("degree split") {
    FieldFq f5(5, 1);
    // cuspidal-type label at (5,2): a = q - 1, b = 1
    FqPoly f{&f5, {2, 0, 1}}; // x^2 + 2, irreducible over F_5
    REQUIRE(poly_irreducible(f));
    auto [a, b] = degree_split(single_label(f5, 2, f, {1}));
    CHECK(a == Nat(4));
    CHECK(b == Nat(1));
    // unipotent: a = 1, b = d_lambda(q)
    auto [a2, b2] = degree_split(single_label(f5, 3, linear(f5, 1), {2, 1}));
    CHECK(a2 == Nat(1));
    CHECK(b2 == unipotent_degree(Partition({2, 1}), 5));
    // product check across whole strata happens inside degree_split
    for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{3, 2}, {3, 3}, {5, 2}}) {
        FieldFq field = FieldFq::from_q(q);
        Budget bb = big_budget();
        PolyUniverse u = PolyUniverse::build(field, n, bb);
        enumerate_labels(u, n, bb, [&](const GreenLabel& mu) { (void)degree_split(mu); });
    }
}

TEST_CASE("degree-valuation bound") {
    FieldFq f3(3, 1);
    // unipotent (x-1 -> (n)): bound 0 <= 0
    CHECK(shah_spallone_bound_check(single_label(f3, 4, linear(f3, 1), {4}), 2));
    // at ell = 2 the bound holds across whole strata
    for (std::uint64_t q : {3u, 5u}) {
        FieldFq field = FieldFq::from_q(q);
        Budget b = big_budget();
        PolyUniverse u = PolyUniverse::build(field, 4, b);
        enumerate_labels(u, 4, b, [&](const GreenLabel& mu) {
            CHECK(shah_spallone_bound_check(mu, 2));
        });
    }
    // at odd ell the stated inequality is false: the degree-(q^3 - 1)
    // character of GL_3(F_5) built from a quadratic and a linear polynomial
    // has v_3(124) = 0, while v_3(3!/1!1!) = 1.
    FieldFq f5(5, 1);
    GreenLabel counter;
    counter.q = 5;
    counter.n = 3;
    counter.assignment.emplace_back(linear(f5, 1), Partition({1}));
    counter.assignment.emplace_back(FqPoly{&f5, {2, 0, 1}}, Partition({1}));
    std::sort(counter.assignment.begin(), counter.assignment.end(),
              [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    CHECK(*degree_valuation(counter).exact_degree == Nat(124));
    CHECK(!shah_spallone_bound_check(counter, 3));
    CHECK(shah_spallone_bound_check(counter, 2)); // v2(124) = 2 >= v2(6) = 1
}

TEST_CASE("divisibility statistics") {
    FieldFq f3(3, 1);
    Budget b = big_budget();
    // k = 0: threshold v2((n)_0) = 0 and v2 >= 0 always
    Proportion p0 = divisibility_proportion(f3, 4, 0, b);
    CHECK(p0.count == 0);
    CHECK(p0.total == self_dual_count_gf(f3, 4));

    Proportion p1 = divisibility_proportion(f3, 6, 1, b);
    CHECK(p1.total == self_dual_count_gf(f3, 6));
    CHECK(p1.count <= p1.total);

    // r = 0 guarantees everything
    Proportion c0 = character_divisibility_bound(f3, 4, 1, 0, b);
    CHECK(c0.count == c0.total);
    // the sufficient-condition threshold ingredient: v2(3^6 - 1) = v2(728) = 3
    CHECK(v2_qpow_minus_one(3, 6) == 3);
    Proportion c1 = character_divisibility_bound(f3, 6, 1, 1, b);
    CHECK(c1.total == self_dual_count_gf(f3, 6));
}

TEST_CASE("budget propagation") {
    FieldFq f3(3, 1);
    Budget big = big_budget();
    PolyUniverse u = PolyUniverse::build(f3, 3, big);
    Budget tiny{3};
    CHECK_THROWS_AS(enumerate_labels(u, 3, tiny, [](const GreenLabel&) {}),
                    budget_error);
}
