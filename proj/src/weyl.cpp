#include "schubres/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubres {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

// Omitted simple roots of P~_s: {s, ..., n}.
std::vector<int> tilde_roots(int s, int n) {
    std::vector<int> roots;
    for (int l = s; l <= n; ++l) roots.push_back(l);
    return roots;
}

// Sorts each block of positions delimited by the omitted roots.
Permutation sort_blocks(const Permutation& p, std::span<const int> omitted, bool ascending) {
    std::vector<int> v = p.values();
    int start = 0;
    auto sort_range = [&](int lo, int hi) {
        if (ascending)
            std::sort(v.begin() + lo, v.begin() + hi);
        else
            std::sort(v.begin() + lo, v.begin() + hi, std::greater<>());
    };
    for (int l : omitted) {
        sort_range(start, l);
        start = l;
    }
    sort_range(start, static_cast<int>(v.size()));
    return Permutation(std::move(v));
}

void check_s(const GrassPerm& w, int s) {
    if (s < 1 || s > w.n() - 1)
        throw std::invalid_argument("s must satisfy 1 <= s <= n-1 (got s=" + std::to_string(s) + ")");
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    std::vector<int> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("not a permutation of 1..N: " + join(values_));
}

Permutation Permutation::identity(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

int Permutation::inversions() const noexcept {
    int inv = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (std::size_t j = i + 1; j < values_.size(); ++j)
            if (values_[i] > values_[j]) ++inv;
    return inv;
}

std::string Permutation::to_string() const { return join(values_); }

GrassPerm::GrassPerm(std::vector<int> a, int n, int m) : a_(std::move(a)), n_(n), m_(m) {
    if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive");
    if (static_cast<int>(a_.size()) != n)
        throw std::invalid_argument("w must have exactly n = " + std::to_string(n) + " entries, got " +
                                    std::to_string(a_.size()));
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < 1 || a_[i] > n + m)
            throw std::invalid_argument("entries of w must lie in 1..N = " + std::to_string(n + m));
        if (i > 0 && a_[i - 1] >= a_[i]) throw std::invalid_argument("entries of w must be strictly increasing");
    }
}

Permutation GrassPerm::minimal_representative() const {
    std::vector<int> v = a_;
    for (int x = 1; x <= big_n(); ++x)
        if (!std::binary_search(a_.begin(), a_.end(), x)) v.push_back(x);
    return Permutation(std::move(v));
}

std::string GrassPerm::to_string() const { return join(a_); }

int length(const GrassPerm& w) {
    int len = 0;
    for (int i = 1; i <= w.n(); ++i) len += w.at(i) - i;
    return len;
}

int r_of(const GrassPerm& w) {
    if (w.at(1) > w.n()) throw std::invalid_argument("no entry <= n in " + w.to_string());
    int r = 0;
    while (r < w.n() && w.at(r + 1) <= w.n()) ++r;
    return r;
}

std::string class_violation(const GrassPerm& w) {
    const int n = w.n();
    if (w.at(1) > n) return "no entry <= n, so r(w) is undefined";
    const int r = r_of(w);
    if (r == n) return "every entry is <= n (r = n); the class requires 1 <= r <= n-1";
    for (int i = 1; i <= r; ++i)
        if (w.at(i) != n - r + i)
            return "the first r = " + std::to_string(r) + " entries must be (" + std::to_string(n - r + 1) +
                   ",...," + std::to_string(n) + ")";
    if (w.at(n) != w.big_n()) return "the last entry must be N = " + std::to_string(w.big_n());
    return {};
}

std::optional<int> class_index(const GrassPerm& w) {
    if (!class_violation(w).empty()) return std::nullopt;
    return r_of(w);
}

bool is_in_class_wr(const GrassPerm& w) { return class_index(w).has_value(); }

Multiplicities bundle_multiplicities(const GrassPerm& w) {
    const std::string why = class_violation(w);
    if (!why.empty()) throw MembershipError(w.to_string() + " is not in W_r: " + why);
    const int r = r_of(w);
    Multiplicities out;
    for (int i = r; i <= w.n() - 1; ++i) out[i] = w.at(i + 1) - w.at(i);
    return out;
}

GrassPerm determinantal_w(int k, int m, int n) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("determinantal w requires 1 <= k <= n-1");
    std::vector<int> a;
    for (int x = k + 1; x <= n; ++x) a.push_back(x);
    for (int x = n + m - k + 1; x <= n + m; ++x) a.push_back(x);
    return GrassPerm(std::move(a), n, m);
}

std::vector<GrassPerm> enumerate_class_w(int n, int m) {
    std::vector<GrassPerm> out;
    const int big_n = n + m;
    for (int r = 1; r <= n - 1; ++r) {
        std::vector<int> a;
        for (int x = n - r + 1; x <= n; ++x) a.push_back(x);
        // choose a_{r+1} < ... < a_{n-1} from {n+1, ..., N-1}
        std::function<void(int, int)> rec = [&](int need, int lo) {
            if (need == 0) {
                std::vector<int> full = a;
                full.push_back(big_n);
                out.emplace_back(std::move(full), n, m);
                return;
            }
            for (int x = lo; x <= big_n - 1 - (need - 1); ++x) {
                a.push_back(x);
                rec(need - 1, x + 1);
                a.pop_back();
            }
        };
        rec(n - 1 - r, n + 1);
    }
    return out;
}

std::vector<GrassPerm> enumerate_grassmannian(int n, int m) {
    std::vector<GrassPerm> out;
    std::vector<int> a;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(a.size()) == n) {
            out.emplace_back(a, n, m);
            return;
        }
        for (int x = lo; x <= n + m; ++x) {
            a.push_back(x);
            rec(x + 1);
            a.pop_back();
        }
    };
    rec(1);
    return out;
}

Permutation w_prime(const GrassPerm& w) {
    const int r = r_of(w);
    std::vector<int> v(w.entries().begin(), w.entries().begin() + r);
    for (int c = w.n(); c >= 1; --c)
        if (std::find(v.begin(), v.begin() + r, c) == v.begin() + r) v.push_back(c);
    return Permutation(std::move(v));
}

Permutation w_tilde(const GrassPerm& w, int s) {
    check_s(w, s);
    const auto roots = tilde_roots(s, w.n());
    return sort_blocks(w.minimal_representative(), roots, true);
}

Permutation w_max(const GrassPerm& w, int s) {
    check_s(w, s);
    if (s > r_of(w)) throw std::invalid_argument("s must satisfy s <= r(w)");
    const auto roots = tilde_roots(s, w.n());
    return sort_blocks(w.minimal_representative(), roots, false);
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
    const auto& v = p.values();
    const auto& pat = pattern.values();
    const std::size_t k = pat.size();
    if (k == 0) return true;
    if (k > v.size()) return false;
    std::vector<int> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (chosen.size() == k) return true;
        for (std::size_t i = from; i + (k - chosen.size()) <= v.size(); ++i) {
            // the new entry must sit in the same relative order as in the pattern
            const std::size_t idx = chosen.size();
            bool ok = true;
            for (std::size_t c = 0; c < idx && ok; ++c)
                ok = (pat[c] < pat[idx]) == (chosen[c] < v[i]);
            if (!ok) continue;
            chosen.push_back(v[i]);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

bool bruhat_leq_parabolic(const Permutation& u, const Permutation& v, std::span<const int> omitted) {
    if (u.size() != v.size()) throw std::invalid_argument("permutations of different sizes");
    std::vector<int> pu;
    std::vector<int> pv;
    for (int l : omitted) {
        pu.assign(u.values().begin(), u.values().begin() + l);
        pv.assign(v.values().begin(), v.values().begin() + l);
        std::sort(pu.begin(), pu.end());
        std::sort(pv.begin(), pv.end());
        for (int i = 0; i < l; ++i)
            if (pu[static_cast<std::size_t>(i)] > pv[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

int tangent_dimension(const GrassPerm& w, int s) {
    check_s(w, s);
    const int n = w.n();
    const int big_n = w.big_n();
    const auto roots = tilde_roots(s, n);
    const Permutation tilde = w_tilde(w, s);
    int count = 0;
    std::vector<int> refl(static_cast<std::size_t>(big_n));
    for (int j = 1; j <= n; ++j) {
        for (int i = std::max(j + 1, s + 1); i <= big_n; ++i) {
            std::iota(refl.begin(), refl.end(), 1);
            std::swap(refl[static_cast<std::size_t>(i - 1)], refl[static_cast<std::size_t>(j - 1)]);
            if (bruhat_leq_parabolic(Permutation(refl), tilde, roots)) ++count;
        }
    }
    return count;
}

bool is_smooth_by_tangent_space(const GrassPerm& w, int s) { return tangent_dimension(w, s) == length(w); }

bool is_smooth_by_patterns(const GrassPerm& w, int s) {
    const Permutation top = w_max(w, s);
    return !contains_pattern(top, Permutation({4, 2, 3, 1})) && !contains_pattern(top, Permutation({3, 4, 1, 2}));
}

LinearityCoordinates linearity_coordinates(const GrassPerm& w, int s) {
    if (!is_smooth_by_tangent_space(w, s)) throw std::domain_error("linearity property requires smoothness");
    const int n = w.n();
    // (i, j) survives iff the transposition (j i) lies below w~: for every
    // omitted root l with j <= l < i, i <= a_l and a_k > k for j <= k < l.
    auto survives = [&](int i, int j) {
        for (int l = std::max(j, s); l <= n && l < i; ++l) {
            if (i > w.at(l)) return false;
            for (int k = j; k < l; ++k)
                if (w.at(k) <= k) return false;
        }
        return true;
    };
    LinearityCoordinates out;
    for (int i = 1; i <= w.m(); ++i)
        for (int j = 1; j <= n; ++j)
            if (survives(n + i, j)) out.fiber.emplace(i, j);
    for (int i = s + 1; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (survives(i, j)) out.base.emplace(i, j);
    return out;
}

CoordinateSet opposite_cell_coordinates(std::span<const int> omitted, int big_n) {
    if (omitted.empty()) throw std::invalid_argument("opposite cell needs a nonempty set of omitted roots");
    CoordinateSet out;
    for (int l : omitted) {
        if (l < 1 || l > big_n - 1) throw std::invalid_argument("omitted root out of range 1..N-1");
        for (int j = 1; j <= l; ++j)
            for (int i = l + 1; i <= big_n; ++i) out.emplace(i, j);
    }
    return out;
}

}  // namespace schubres
