#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schubres {

/// Raised when a Grassmannian permutation is outside the class the
/// resolution machinery handles.
class MembershipError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Permutation of {1..N} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int size);

    const std::vector<int>& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    int operator()(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }

    int inversions() const noexcept;
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Element of W^P for the maximal parabolic P of GL_{m+n} omitting alpha_n,
/// stored as the strictly increasing sequence (a_1, ..., a_n).
class GrassPerm {
public:
    GrassPerm(std::vector<int> a, int n, int m);

    const std::vector<int>& entries() const noexcept { return a_; }
    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int big_n() const noexcept { return n_ + m_; }
    /// a_i, 1-based.
    int at(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }

    /// Full one-line permutation: the entries followed by their complement
    /// in increasing order (the minimal coset representative).
    Permutation minimal_representative() const;

    std::string to_string() const;

    friend bool operator==(const GrassPerm&, const GrassPerm&) = default;

private:
    std::vector<int> a_;
    int n_;
    int m_;
};

/// Multiplicity map {i -> m_i} of a bundle sum of U_i's on GL_n/Q.
using Multiplicities = std::map<int, int>;

using Coordinate = std::pair<int, int>;
using CoordinateSet = std::set<Coordinate>;

int length(const GrassPerm& w);

/// The r with a_r <= n < a_{r+1}; throws std::invalid_argument when a_1 > n.
int r_of(const GrassPerm& w);

/// r when w lies in the class W_r, nothing otherwise.
std::optional<int> class_index(const GrassPerm& w);
bool is_in_class_wr(const GrassPerm& w);

/// Explains why w is not in any W_r; empty string when it is.
std::string class_violation(const GrassPerm& w);

/// m_i = a_{i+1} - a_i for r <= i <= n-1 (with a_r = n, a_n = N).
Multiplicities bundle_multiplicities(const GrassPerm& w);

/// (k+1, ..., n, N-k+1, ..., N), whose opposite cell is the rank <= k locus.
GrassPerm determinantal_w(int k, int m, int n);

/// Every element of W_r for 1 <= r <= n-1, grouped by r then lexicographic.
std::vector<GrassPerm> enumerate_class_w(int n, int m);

/// Every element of W^P, in lexicographic order.
std::vector<GrassPerm> enumerate_grassmannian(int n, int m);

Permutation w_prime(const GrassPerm& w);

/// Minimal representative of w in W^{P~_s}.
Permutation w_tilde(const GrassPerm& w, int s);

/// Maximal representative of the coset w W_{P~_s}: each block of positions
/// {1..s}, {s+1}, ..., {n}, {n+1..N} sorted decreasingly.
Permutation w_max(const GrassPerm& w, int s);

bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// Parabolic Bruhat comparison u <= v in W / W_{P_A} for A the set of
/// omitted simple roots: for each l in A, the sorted l-prefix of u is
/// entrywise at most that of v.
bool bruhat_leq_parabolic(const Permutation& u, const Permutation& v, std::span<const int> omitted);

/// Dimension of the Zariski tangent space of X_{P~_s}(w~) at the identity.
int tangent_dimension(const GrassPerm& w, int s);

bool is_smooth_by_tangent_space(const GrassPerm& w, int s);
bool is_smooth_by_patterns(const GrassPerm& w, int s);

struct LinearityCoordinates {
    CoordinateSet fiber;   ///< V_w inside the m x n block (local row, column)
    CoordinateSet base;    ///< V'_w inside the trapezoid A (global row, column)
};

/// Coordinates not forced to vanish on the opposite cell of a smooth
/// X_{P~_s}(w~). Throws std::domain_error when it is singular.
LinearityCoordinates linearity_coordinates(const GrassPerm& w, int s);

/// Coordinates (i, j) of the opposite cell of GL_N / P_{A^}: those with
/// j <= l < i <= N for some l in A.
CoordinateSet opposite_cell_coordinates(std::span<const int> omitted, int big_n);

}  // namespace schubres
