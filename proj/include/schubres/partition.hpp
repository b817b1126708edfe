#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "schubres/bigint.hpp"

namespace schubres {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;

    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Entries padded with zeros to `len`.
    std::vector<int> padded(std::size_t len) const;

    bool contained_in(const Partition& box) const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Formal sum of Schur functors with positive integer coefficients.
using SchurTermSum = std::map<Partition, BigInt>;

/// Adds `coeff` to the term for `p`, dropping it when it reaches zero.
void accumulate(SchurTermSum& sum, const Partition& p, const BigInt& coeff);

Partition conjugate(const Partition& lambda);

/// Dimension of S_lambda(C^k) by the hook-content formula.
BigInt dim_schur(const Partition& lambda, int k);

/// Littlewood-Richardson expansion of S_lambda (x) S_mu, keeping only
/// partitions with at most `max_length` rows.
SchurTermSum lr_product(const Partition& lambda, const Partition& mu, int max_length);

/// Cauchy decomposition of the t-th exterior power of C^mult (x) U with
/// rank U = `rank`. Terms are indexed by the U-side partition mu and carry
/// dim S_{mu'}(C^mult) as coefficient.
SchurTermSum cauchy_exterior(int t, int mult, int rank);

/// All partitions of `total` with at most `max_rows` rows and parts at most
/// `max_part`, in decreasing lexicographic order.
std::vector<Partition> partitions_in_box(int total, int max_rows, int max_part);

/// All tuples (t_1..t_p) with sum t and 0 <= t_c <= caps[c], in
/// lexicographic order.
std::vector<std::vector<int>> compositions(int t, const std::vector<int>& caps);

BigInt binomial(int n, int k);

}  // namespace schubres
