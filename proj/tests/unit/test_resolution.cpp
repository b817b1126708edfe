#include <doctest.h>

#include <iostream>

#include "oracle.hpp"
#include "schubres/resolution.hpp"

using namespace schubres;

namespace {

using Betti = std::map<std::pair<int, int>, BigInt>;

// Hilbert numerator division by repeated top-down long division.
std::vector<BigInt> reduce_numerator(std::vector<BigInt> p, int times) {
    for (int k = 0; k < times; ++k) {
        std::vector<BigInt> q;
        REQUIRE(oracle::divide_once(p, q));
        p = std::move(q);
    }
    return p;
}

}  // namespace

TEST_SUITE("resolution") {

TEST_CASE("rank 2 locus of a 4x3 matrix") {
    const auto report = resolve(GrassPerm({3, 4, 6, 7}, 4, 3));
    CHECK(report.betti.entries == Betti{{{0, 0}, 1}, {{1, 3}, 4}, {{2, 4}, 3}});
    REQUIRE(report.hilbert);
    CHECK(report.hilbert->codim == 2);
    CHECK(report.hilbert->numerator == std::vector<BigInt>{1, 0, 0, -4, 3});
    CHECK(report.hilbert->reduced_numerator == std::vector<BigInt>{1, 2, 3});
    CHECK(report.hilbert->multiplicity == 6);
    CHECK(report.regularity == 2);
    CHECK(report.conjectured_regularity == 2);
    CHECK(report.checks.all_passed());

    const auto det = resolve(determinantal_w(2, 3, 4));
    CHECK(det.betti == report.betti);
    CHECK(det.regularity == report.regularity);
}

TEST_CASE("two-parabolic example on GL_12") {
    const GrassPerm w({5, 6, 8, 9, 11, 12}, 6, 6);
    const auto report = resolve(w);
    CHECK(report.computed_bundle == BundleSpec(6, {{2, 3}, {4, 3}}));
    const Betti expected{{{0, 0}, 1},   {{1, 3}, 20},  {{1, 5}, 18},   {{2, 4}, 45},
                         {{2, 6}, 53},  {{3, 5}, 36},  {{3, 7}, 36},   {{3, 9}, 70},
                         {{4, 6}, 10},  {{4, 10}, 153}, {{5, 11}, 108}, {{6, 12}, 26}};
    CHECK(report.betti.entries == expected);
    REQUIRE(report.hilbert);
    CHECK(report.hilbert->codim == 6);
    CHECK(report.regularity == 6);
    CHECK(report.conjectured_regularity == 6);
    CHECK(report.checks.all_passed());
    CHECK(report.hilbert->reduced_numerator == reduce_numerator(report.hilbert->numerator, 6));

    // the normalized and raw bundles give the same answer
    CHECK(resolve(w, false).cohomology == report.cohomology);
}

TEST_CASE("betti_from_cohomology") {
    CohomologyTable empty;
    empty.n = 3;
    empty.entries[{0, 0}] = {{Partition{}, 1}};
    CHECK(betti_from_cohomology(empty).entries == Betti{{{0, 0}, 1}});

    CohomologyTable bad;
    bad.n = 3;
    bad.entries[{1, 2}] = {{Partition{1}, 1}};
    CHECK_THROWS_WITH_AS(betti_from_cohomology(bad), doctest::Contains("negative homological index"),
                         ConsistencyError);
}

TEST_CASE("polynomial division") {
    CHECK(divide_by_one_minus_t({1, 0, 0, -4, 3}, 2) == std::vector<BigInt>{1, 2, 3});
    CHECK(divide_by_one_minus_t({1}, 0) == std::vector<BigInt>{1});
    CHECK_THROWS_AS(divide_by_one_minus_t({1, 1}, 1), ConsistencyError);
    CHECK_THROWS_AS(divide_by_one_minus_t({1, -1}, 2), ConsistencyError);
}

TEST_CASE("validate flags broken tables") {
    const GrassPerm w({3, 4, 6, 7}, 4, 3);
    BettiTable wrong;
    wrong.entries = {{{0, 0}, 1}, {{1, 1}, 1}, {{1, 3}, 4}, {{2, 4}, 3}};
    const auto report = validate(wrong, w);
    CHECK_FALSE(report.all_passed());
    CHECK_FALSE(report.find("alternating_sum")->passed);
    CHECK_FALSE(report.find("no_linear_forms")->passed);
    CHECK_FALSE(report.find("hilbert_divisible")->passed);
    CHECK(report.find("f0_is_r")->passed);
    CHECK(report.find("length_is_codim")->passed);
    CHECK(report.find("missing") == nullptr);

    // the printed table entry 90 in place of 108 cannot be a resolution
    auto six = resolve(GrassPerm({5, 6, 8, 9, 11, 12}, 6, 6)).betti;
    six.entries[{5, 11}] = 90;
    const auto broken = validate(six, GrassPerm({5, 6, 8, 9, 11, 12}, 6, 6));
    CHECK_FALSE(broken.find("alternating_sum")->passed);
    CHECK_FALSE(broken.find("hilbert_divisible")->passed);
}

TEST_CASE("every w in W_r with n, m <= 5 passes validation") {
    int count = 0;
    int counterexamples = 0;
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            for (const auto& w : enumerate_class_w(n, m)) {
                CAPTURE(w.to_string());
                const auto report = resolve(w);
                for (const auto& c : report.checks.checks) CHECK_MESSAGE(c.passed, c.id << ": " << c.detail);
                REQUIRE(report.hilbert);
                CHECK(report.hilbert->multiplicity > 0);
                CHECK(report.hilbert->reduced_numerator == reduce_numerator(report.hilbert->numerator,
                                                                            report.hilbert->codim));
                for (const auto& [key, value] : report.betti.entries) CHECK(key.first <= key.second);
                if (report.regularity != report.conjectured_regularity) {
                    ++counterexamples;
                    MESSAGE("regularity counterexample " << w.to_string() << ": " << report.regularity << " vs "
                                                         << report.conjectured_regularity);
                }
                ++count;
            }
    CHECK(count > 50);
    MESSAGE(count << " resolutions, " << counterexamples << " regularity counterexamples");
}

TEST_CASE("determinantal: multi-level raw bundle equals one-level normalized bundle") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            for (int k = 1; k <= std::min({2, n - 1, m}); ++k) {
                const GrassPerm w = determinantal_w(k, m, n);
                CAPTURE(w.to_string());
                const auto raw = resolve(w, false);
                const auto one_level = resolve(w, true);
                CHECK(one_level.computed_bundle.multiplicities().size() == 1);
                CHECK(raw.cohomology == one_level.cohomology);
                CHECK(raw.betti == one_level.betti);
            }
}

TEST_CASE("determinantal regularity is k (min(m, n) - k)") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            for (int k = 1; k <= std::min(n - 1, m); ++k) {
                CAPTURE(determinantal_w(k, m, n).to_string());
                CHECK(resolve(determinantal_w(k, m, n)).regularity == k * (std::min(m, n) - k));
            }
}

TEST_CASE("rank 1 locus is resolved by Eagon-Northcott when n = 2") {
    for (int m = 1; m <= 6; ++m) {
        const auto report = resolve(determinantal_w(1, m, 2));
        // beta_{i, i+1} = i * C(m, i+1)
        for (int i = 1; i < m; ++i) CHECK(report.betti.rank(i, i + 1) == i * binomial(m, i + 1));
        CHECK(report.betti.length() == m - 1);
        REQUIRE(report.hilbert);
        CHECK(report.hilbert->multiplicity == m);
    }
}

}
