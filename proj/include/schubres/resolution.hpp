#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubres/bigint.hpp"
#include "schubres/bundle.hpp"
#include "schubres/weyl.hpp"

namespace schubres {

/// Raised when computed data contradicts a structural fact the resolution
/// must satisfy (shape, divisibility).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graded Betti numbers: (homological index i, internal degree d) -> rank of
/// R(-d) in F_i.
struct BettiTable {
    std::map<std::pair<int, int>, BigInt> entries;

    BigInt rank(int i, int d) const;
    /// Largest i with a nonzero entry.
    int length() const noexcept;
    /// Sum over d of beta_{i,d}.
    BigInt total(int i) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct HilbertData {
    std::vector<BigInt> numerator;          ///< coefficients of sum (-1)^i beta_{i,d} t^d
    int ambient = 0;                        ///< mn
    int codim = 0;
    std::vector<BigInt> reduced_numerator;  ///< numerator / (1-t)^codim
    BigInt multiplicity;
};

/// F_i = sum_j H^j(wedge^{i+j} xi) (x) R(-i-j).
BettiTable betti_from_cohomology(const CohomologyTable& table);

/// Exact division of p by (1-t)^times. Throws ConsistencyError on a nonzero
/// remainder.
std::vector<BigInt> divide_by_one_minus_t(std::vector<BigInt> p, int times);

HilbertData hilbert_data(const BettiTable& betti, const GrassPerm& w);

int regularity(const CohomologyTable& table);
int conjectured_regularity(const GrassPerm& w);

struct Check {
    std::string id;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;
    bool all_passed() const noexcept;
    const Check* find(const std::string& id) const noexcept;
};

/// Structural checks on a computed resolution: alternating rank sum,
/// F_0 = R, no linear generators, length equal to codimension, and
/// divisibility of the Hilbert numerator.
ValidationReport validate(const BettiTable& betti, const GrassPerm& w);

/// Everything the front end reports for one w.
struct ResolutionReport {
    GrassPerm w;
    int r = 0;
    BundleSpec bundle;           ///< as built from w
    BundleSpec computed_bundle;  ///< what the pipeline actually ran on
    CohomologyTable cohomology;
    BettiTable betti;
    std::optional<HilbertData> hilbert;
    std::string hilbert_error;
    int regularity = 0;
    int conjectured_regularity = 0;
    ValidationReport checks;
};

ResolutionReport resolve(const GrassPerm& w, bool normalize = true);

}  // namespace schubres
