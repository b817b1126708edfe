#pragma once

#include <optional>
#include <vector>

#include "schubres/partition.hpp"

namespace schubres {

using Weight = std::vector<int>;

/// Outcome of Bott's algorithm on an irreducible homogeneous bundle: either
/// no cohomology at all, or a single nonzero degree carrying S_weight.
struct BottResult {
    int degree = 0;
    Weight weight;

    /// The output weight as a partition; throws if it has negative entries.
    Partition partition() const { return Partition(weight); }

    friend bool operator==(const BottResult&, const BottResult&) = default;
};

/// rho-shift, sort, unshift. Empty when alpha + rho has a repeated entry.
std::optional<BottResult> bott(const Weight& alpha);

/// The same answer computed by the exchange rule: repeatedly find an ascent
/// alpha_i < alpha_{i+1}; stop with zero if alpha_{i+1} = alpha_i + 1,
/// otherwise replace the pair by (alpha_{i+1} - 1, alpha_i + 1).
std::optional<BottResult> bott_by_exchange(Weight alpha);

/// Cohomology of S_lambda U_j on the Grassmannian fibre Gr(j, d), read off
/// from the padded weight (0^{d-j}, lambda_1, ..., lambda_j). A nonzero
/// result is S_gamma of the rank-d bundle one level up.
std::optional<BottResult> cohom_schur_on_grass(const Partition& lambda, int j, int d);

}  // namespace schubres
