#include <doctest.h>

#include <functional>

#include "schubres/bundle.hpp"

using namespace schubres;

namespace {

// Every bundle on GL_n/Q with indices in 1..n-1 and rank <= max_rank.
std::vector<BundleSpec> bundle_family(int n, int max_rank) {
    std::vector<BundleSpec> out;
    Multiplicities mult;
    std::function<void(int, int)> rec = [&](int index, int rank) {
        if (index == n) {
            if (!mult.empty()) out.emplace_back(n, mult);
            return;
        }
        for (int m = 0; rank + m * index <= max_rank; ++m) {
            if (m > 0) mult[index] = m;
            rec(index + 1, rank + m * index);
            mult.erase(index);
        }
    };
    rec(1, 0);
    return out;
}

}  // namespace

TEST_SUITE("bundlecalc") {

TEST_CASE("bundle description") {
    BundleSpec xi(4, {{2, 2}, {3, 1}, {1, 0}});
    CHECK(xi.multiplicities() == Multiplicities{{2, 2}, {3, 1}});
    CHECK(xi.rank() == 7);
    CHECK(xi.total_multiplicity() == 3);
    CHECK(xi.min_index() == 2);
    CHECK(xi.to_string() == "{2:2, 3:1}");
    CHECK_THROWS_AS(BundleSpec(4, {{4, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BundleSpec(4, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BundleSpec(4, {{2, -1}}), std::invalid_argument);
}

TEST_CASE("build_bundle") {
    CHECK(build_bundle(GrassPerm({3, 4, 6, 7}, 4, 3)) == BundleSpec(4, {{2, 2}, {3, 1}}));
    CHECK(build_bundle(determinantal_w(1, 3, 4)) == BundleSpec(4, {{3, 3}}));
    CHECK(build_bundle(GrassPerm({5, 6, 8, 9, 11, 12}, 6, 6)) == BundleSpec(6, {{2, 2}, {3, 1}, {4, 2}, {5, 1}}));
    CHECK_THROWS_AS(build_bundle(GrassPerm({2, 4, 6, 7}, 4, 3)), MembershipError);
}

TEST_CASE("normalize_bundle") {
    CHECK(normalize_bundle(BundleSpec(6, {{2, 2}, {3, 1}, {4, 2}, {5, 1}}), 2) == BundleSpec(6, {{2, 3}, {4, 3}}));
    CHECK(normalize_bundle(BundleSpec(6, {{2, 3}}), 2) == BundleSpec(6, {{2, 3}}));
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= 5; ++m)
            for (int k = 1; k <= std::min(n - 1, m); ++k)
                CHECK(normalize_bundle(build_bundle(determinantal_w(k, m, n)), n - k) == BundleSpec(n, {{n - k, m}}));
    CHECK_THROWS_AS(normalize_bundle(BundleSpec(4, {{1, 1}, {2, 2}}), 2), std::invalid_argument);
}

TEST_CASE("cohomology table of the 4x3 rank 2 locus") {
    const auto table = cohomology_table(BundleSpec(4, {{2, 2}, {3, 1}}));
    CohomologyTable expected;
    expected.n = 4;
    expected.entries[{0, 0}] = {{Partition{}, 1}};
    expected.entries[{3, 2}] = {{Partition{1, 1, 1}, 1}};
    expected.entries[{4, 2}] = {{Partition{1, 1, 1, 1}, 3}};
    CHECK(table == expected);

    CHECK(euler_characteristic(table, 0) == 1);
    CHECK(euler_characteristic(table, 3) == 4);
    CHECK(euler_characteristic(table, 1) == 0);
}

TEST_CASE("one pushforward level of U_2^3 + U_4^3 on GL_6") {
    TermMap start{{{0, Partition{}}, 1}};
    std::map<int, TermMap> by_t;
    for (int t = 0; t <= 6; ++t) {
        auto image = push_level(start, t, 3, 2, 4);
        if (!image.empty()) by_t[t] = std::move(image);
    }
    std::map<int, TermMap> expected;
    expected[0] = {{{0, Partition{}}, 1}};
    expected[3] = {{{2, Partition{1, 1, 1}}, 1}};
    expected[4] = {{{2, Partition{1, 1, 1, 1}}, 3}};
    CHECK(by_t == expected);
}

TEST_CASE("pushforward conserves size") {
    TermMap start{{{0, Partition{}}, 1}, {{1, Partition{2, 1}}, 2}, {{0, Partition{1, 1}}, 1}};
    for (int t = 0; t <= 8; ++t)
        for (const auto& [key, coeff] : push_level(start, t, 2, 3, 5)) {
            CHECK(coeff > 0);
            const int size = key.second.size();
            CHECK((size == t || size == t + 3 || size == t + 2));
            CHECK(static_cast<int>(key.second.length()) <= 5);
        }
}

TEST_CASE("single level on P^1 reproduces the Eagon-Northcott complex") {
    // maximal minors of a generic 2x4 matrix: R <- R(-2)^6 <- R(-3)^8 <- R(-4)^3
    const auto table = cohomology_table(BundleSpec(2, {{1, 4}}));
    CHECK(table.dimension(0, 0) == 1);
    CHECK(table.dimension(2, 1) == 6);
    CHECK(table.dimension(3, 1) == 8);
    CHECK(table.dimension(4, 1) == 3);
    CHECK(table.entries.size() == 4);
}

TEST_CASE("invariants over a family of bundles") {
    int family = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& xi : bundle_family(n, 8)) {
            CAPTURE(xi.to_string());
            ++family;
            const auto table = cohomology_table(xi);
            REQUIRE(table.entries.count({0, 0}));
            CHECK(table.entries.at({0, 0}) == SchurTermSum{{Partition{}, 1}});
            for (const auto& [key, terms] : table.entries) {
                const auto [t, j] = key;
                CHECK(t >= 0);
                CHECK(t <= xi.rank());
                for (const auto& [gamma, mult] : terms) {
                    CHECK(mult > 0);
                    CHECK(gamma.size() == t);
                }
            }
            // wedge^1 never has cohomology
            for (int j = 0; j <= 10; ++j) CHECK_FALSE(table.entries.count({1, j}));
            // bundles coming from W_r use every index from r to n-1
            const int r = xi.min_index();
            const bool from_class = static_cast<int>(xi.multiplicities().size()) == n - r;
            if (from_class)
                for (const auto& [key, terms] : table.entries) CHECK(key.second <= key.first);
        }
    CHECK(family >= 50);
}

TEST_CASE("normalization leaves the cohomology unchanged") {
    int compared = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& xi : bundle_family(n, 8)) {
            const int r = xi.min_index();
            const auto normalized = normalize_bundle(xi, r);
            if (normalized == xi) continue;
            CAPTURE(xi.to_string());
            CHECK(cohomology_table(xi) == cohomology_table(normalized));
            ++compared;
        }
    CHECK(compared >= 50);
}

TEST_CASE("empty bundle") {
    const auto table = cohomology_table(BundleSpec(4, {}));
    CHECK(table.entries.size() == 1);
    CHECK(table.dimension(0, 0) == 1);
    CHECK(table.max_degree() == 0);
}

}
