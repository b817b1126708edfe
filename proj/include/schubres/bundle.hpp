#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubres/bigint.hpp"
#include "schubres/partition.hpp"
#include "schubres/weyl.hpp"

namespace schubres {

/// xi = sum_i U_i^{m_i} on GL_n / Q, where U_i is the dual of the rank-i
/// tautological quotient. Zero multiplicities are dropped.
class BundleSpec {
public:
    BundleSpec(int n, Multiplicities mult);

    int n() const noexcept { return n_; }
    const Multiplicities& multiplicities() const noexcept { return mult_; }
    bool empty() const noexcept { return mult_.empty(); }
    int rank() const noexcept;
    int total_multiplicity() const noexcept;
    /// Smallest index present; 0 when empty.
    int min_index() const noexcept;

    std::string to_string() const;

    friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

private:
    int n_;
    Multiplicities mult_;
};

/// (cohomological degree, carried partition) -> coefficient.
using TermMap = std::map<std::pair<int, Partition>, BigInt>;

/// One pushforward step of the pipeline. Each input term S_lambda U_j in
/// degree e is tensored with the Cauchy summands of the t-th exterior power
/// of C^mult (x) U_j, and every resulting S_nu U_j is pushed along the
/// Grassmannian fibre Gr(j, next_rank) by Bott's algorithm.
TermMap push_level(const TermMap& in, int t, int mult, int rank, int next_rank);

/// H^j(GL_n/Q, wedge^t xi) = sum of (S_gamma C^n)^{mult}, keyed by (t, j).
struct CohomologyTable {
    int n = 0;
    std::map<std::pair<int, int>, SchurTermSum> entries;

    /// Total dimension of H^j(wedge^t xi).
    BigInt dimension(int t, int j) const;
    int max_degree() const noexcept;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

BundleSpec build_bundle(const GrassPerm& w);

/// Replaces single copies of U_i (i >= r+1) by U_{i-1}, smallest index first,
/// until no index above r has multiplicity one.
BundleSpec normalize_bundle(const BundleSpec& xi, int r);

CohomologyTable cohomology_table(const BundleSpec& xi);

BigInt euler_characteristic(const CohomologyTable& table, int t);

}  // namespace schubres
