#include <doctest.h>

#include <map>

#include "glnq/gl2.hpp"

using namespace glnq;
using namespace glnq::gl2;

TEST_CASE("self-dual census and family counts") {
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 25u, 49u}) {
        auto reps = self_dual_reps(q);
        CHECK(reps.size() == q + 3);
        std::map<Family, std::uint64_t> counts;
        for (const auto& r : reps) {
            CHECK(rep_self_dual(q, r));
            ++counts[family_of(r)];
        }
        CHECK(counts[Family::one_dim] == 2);
        CHECK(counts[Family::principal_series] == (q - 3) / 2 + 1);
        CHECK(counts[Family::steinberg] == 2);
        CHECK(counts[Family::cuspidal] == (q - 1) / 2);
    }
    CHECK_THROWS(self_dual_reps(4));
}

TEST_CASE("irreducible family counts sum to q^2 - 1 and squares to |GL_2|") {
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
        std::uint64_t onedim = q - 1;
        std::uint64_t ps = (q - 1) * (q - 2) / 2;
        std::uint64_t st = q - 1;
        std::uint64_t cusp = q * (q - 1) / 2;
        CHECK(onedim + ps + st + cusp == q * q - 1);
        // sum of squared dimensions
        std::uint64_t sum = onedim * 1 + ps * (q + 1) * (q + 1) + st * q * q +
                            cusp * (q - 1) * (q - 1);
        CHECK(sum == (q * q - 1) * (q * q - q));
    }
}

TEST_CASE("involution character values") {
    std::uint64_t q = 5;
    // cuspidal vanishes at h1
    auto [c1, c2] = char_at_involutions(q, Cuspidal{(q - 1) * 1});
    CHECK(c1 == 0);
    CHECK(c2 == 4); // (q-1) theta(-1), theta(-1) = +1 for self-dual theta
    // trivial representation
    auto [t1, t2] = char_at_involutions(q, OneDim{0});
    CHECK(t1 == 1);
    CHECK(t2 == 1);
    // principal series {chi, chi^-1} with chi(-1) = -1 at q = 5
    auto [p1, p2] = char_at_involutions(q, PrincipalSeries{1, 3});
    CHECK(p1 == -2);
    CHECK(p2 == 6); // (q+1) chi(-1) chi^-1(-1) = q+1
}

TEST_CASE("m_pi parity and the w4 second coefficient") {
    for (std::uint64_t q : {5u, 13u, 17u, 25u, 29u}) {
        for (const auto& rep : self_dual_reps(q)) {
            SwDecision d = sw_decision(q, rep);
            CHECK(d.m_pi % 2 == 0);                             // q = 1 mod 4
            CHECK(static_cast<std::int64_t>(dimension(q, rep)) == d.chi_h2);
            CHECK(d.w4_trivial.has_value());
        }
    }
    for (std::uint64_t q : {3u, 7u, 11u, 27u}) {
        for (const auto& rep : self_dual_reps(q)) {
            SwDecision d = sw_decision(q, rep);
            CHECK(!d.w4_trivial.has_value());
        }
    }
}

TEST_CASE("w2 decisions by subcase") {
    // q = 1 mod 8: everything except the minus pairs
    {
        auto t = summary_table(17);
        for (const auto& row : t) {
            bool expect = row.subcase != Subcase::ps_pair_minus;
            CHECK(row.w2 == expect);
        }
    }
    // q = 7 mod 8 examples: the {1, quadratic} pair is w2-trivial
    {
        auto t = summary_table(7);
        for (const auto& row : t) {
            if (row.subcase == Subcase::ps_one_quadratic) CHECK(row.w2);
            if (row.subcase == Subcase::cuspidal) CHECK(!row.w2);
            if (row.subcase == Subcase::steinberg_quadratic) CHECK(row.w2);
            if (row.subcase == Subcase::steinberg_trivial) CHECK(!row.w2);
        }
    }
    // q = 3 mod 8: the congruence criterion gives w2 = 0 for cuspidal
    // (m_pi = 1 mod 4), which the reference table contradicts; both facts
    // are recorded by the row.
    {
        auto t = summary_table(11);
        for (const auto& row : t) {
            if (row.subcase == Subcase::cuspidal) {
                CHECK(row.w2);
                CHECK(row.covered);
                CHECK(*row.ref_w2 == false);
                CHECK(!row.match_w2);
            }
            if (row.subcase == Subcase::steinberg_trivial) {
                CHECK(row.w2);        // m = 5 = 1 mod 4
                CHECK(!row.covered);  // the reference table only lists psi != 1
            }
        }
    }
}

TEST_CASE("w4 decisions at the reference moduli") {
    // Steinberg at q = 17: m = 8, C(4,2) = 6 even
    for (const auto& row : summary_table(17))
        if (row.subcase == Subcase::steinberg_trivial ||
            row.subcase == Subcase::steinberg_quadratic) {
            CHECK(row.w2);
            CHECK(*row.w4);
            CHECK(row.match_w4);
        }
    // PS minus at q = 13: m = 8: w2 = 0 (q = 5 mod 8), w4 = 0 (q = 13 mod 16)
    for (const auto& row : summary_table(13))
        if (row.subcase == Subcase::ps_pair_minus) {
            CHECK(row.w2);
            CHECK(*row.w4);
            CHECK(row.match_w2);
            CHECK(row.match_w4);
        }
    // q = 5: Steinberg m = 2: standalone w4 = 0 but the reference cell
    // (q = 1 mod 16) says otherwise -- the known m = 2 mod 8 disagreement.
    for (const auto& row : summary_table(5))
        if (row.subcase == Subcase::steinberg_trivial) {
            CHECK(!row.w2);
            CHECK(*row.w4);
            CHECK(!row.match_w4);
        }
}

TEST_CASE("sw_decision w1 by family") {
    std::uint64_t q = 7;
    CHECK(sw_decision(q, OneDim{0}).w1_trivial == Tri::yes);
    CHECK(sw_decision(q, OneDim{3}).w1_trivial == Tri::no);
    CHECK(sw_decision(q, PrincipalSeries{1, 5}).w1_trivial == Tri::no);
    CHECK(sw_decision(q, SteinbergTwist{0}).w1_trivial == Tri::no);
    CHECK(sw_decision(q, SteinbergTwist{3}).w1_trivial == Tri::yes);
    CHECK(sw_decision(q, Cuspidal{6}).w1_trivial == Tri::unknown);
    OracleHints hints;
    hints.cuspidal_det_trivial = false;
    CHECK(sw_decision(q, Cuspidal{6}, hints).w1_trivial == Tri::no);
    CHECK_THROWS(sw_decision(q, OneDim{1})); // not self-dual
}

TEST_CASE("density records") {
    // q = 17: the criterion keeps the minus pairs out, so (3q+13)/4 = 16
    DensityRecord r17 = density(17);
    CHECK(r17.total_orthogonal == 20);
    CHECK(r17.count_w2_zero == 16);
    CHECK(r17.count_w2_zero_ref == 20);
    CHECK(r17.family_census == 19);

    // q = 13: one-dims (2) + minus pairs (3); reference closed form 3
    DensityRecord r13 = density(13);
    CHECK(r13.count_w2_zero == 5);
    CHECK(r13.count_w2_zero_ref == 3);

    // q = 11: 2 one-dims + 2 plus-pairs + trivial Steinberg + 5 cuspidal
    DensityRecord r11 = density(11);
    CHECK(r11.count_w2_zero == 10);
    CHECK(r11.count_w2_zero_ref == 4); // (q+5)/4

    DensityRecord r3 = density(3);
    CHECK(r3.total_orthogonal == 6);
    CHECK(r3.count_w2_zero == 4); // trivial, quadratic, St, cuspidal
    CHECK(r3.count_w2_zero_ref == 2);

    DensityRecord r7 = density(7);
    CHECK(r7.count_w2_zero == 5); // 2 one-dims + minus pair + {1,mu} + St twist
    CHECK(r7.count_w2_zero_ref == 1);
}

TEST_CASE("prime powers") {
    auto pp = prime_powers(30);
    CHECK(pp == std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
    auto pp1 = prime_powers(10, 1);
    CHECK(pp1 == std::vector<std::uint64_t>{9});
    CHECK(prime_powers(3) == std::vector<std::uint64_t>{3});
    CHECK_THROWS(prime_powers(2));
}

TEST_CASE("global average matches the per-class enumerated limits") {
    DensitySummary s = global_average(4000, 2);
    // enumerated ratios approach 3/4, 3/4, 1/4, 1/4 (global 1/2);
    // the reference counts approach 1, 1/4, 1/4, 0 (global 3/8)
    CHECK(s.ratio(0) == doctest::Approx(0.75).epsilon(0.02));
    CHECK(s.ratio(1) == doctest::Approx(0.75).epsilon(0.02));
    CHECK(s.ratio(2) == doctest::Approx(0.25).epsilon(0.05));
    CHECK(s.ratio(3) == doctest::Approx(0.25).epsilon(0.05));
    CHECK(s.ratio(4) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(s.ratio_ref(0) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(s.ratio_ref(4) == doctest::Approx(0.375).epsilon(0.02));
    // parallel split merges to the same sums
    DensitySummary s1 = global_average(4000, 1);
    for (unsigned i = 0; i < 5; ++i) {
        CHECK(s.w2_zero[i] == s1.w2_zero[i]);
        CHECK(s.total[i] == s1.total[i]);
    }
}
