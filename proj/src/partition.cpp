#include "schubres/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schubres {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t len) const {
    std::vector<int> out(std::max(len, parts_.size()), 0);
    std::copy(parts_.begin(), parts_.end(), out.begin());
    return out;
}

bool Partition::contained_in(const Partition& box) const noexcept {
    if (length() > box.length()) return false;
    for (std::size_t i = 0; i < length(); ++i)
        if (parts_[i] > box[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

void accumulate(SchurTermSum& sum, const Partition& p, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = sum.try_emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) sum.erase(it);
    }
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int row : lambda.parts())
        for (int c = 0; c < row; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

BigInt dim_schur(const Partition& lambda, int k) {
    if (lambda.empty()) return 1;
    if (k <= 0 || static_cast<int>(lambda.length()) > k) return 0;
    const Partition conj = conjugate(lambda);
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            const int row = static_cast<int>(i);
            num *= k + j - row;
            den *= (lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - row) - 1;
        }
    }
    return num / den;
}

namespace {

// Builds LR tableaux of shape nu/lambda and content mu by attaching the
// letters 1, 2, ... one horizontal strip at a time. When placing letter k+1
// the reverse reading word stays a lattice word iff, for every row i, the
// number of (k+1)s in rows <= i is at most the number of ks in rows < i.
class LrEnumerator {
public:
    LrEnumerator(const Partition& mu, int max_length, SchurTermSum& out)
        : mu_(mu), rows_(static_cast<std::size_t>(max_length)), out_(out) {}

    void run(const Partition& lambda) {
        std::vector<int> shape = lambda.padded(rows_);
        std::vector<int> prev(rows_, 0);
        place_letter(0, shape, prev);
    }

private:
    void place_letter(std::size_t letter, const std::vector<int>& shape, const std::vector<int>& prev) {
        if (letter == mu_.length()) {
            accumulate(out_, Partition(shape), 1);
            return;
        }
        std::vector<int> next = shape;
        std::vector<int> counts(rows_, 0);
        fill_row(letter, 0, mu_[letter], 0, 0, shape, prev, next, counts);
    }

    void fill_row(std::size_t letter, std::size_t row, int remaining, int placed_before, int prev_before,
                  const std::vector<int>& shape, const std::vector<int>& prev, std::vector<int>& next,
                  std::vector<int>& counts) {
        if (remaining == 0) {
            place_letter(letter + 1, next, counts);
            return;
        }
        if (row == rows_) return;
        int cap = remaining;
        if (row > 0) cap = std::min(cap, shape[row - 1] - shape[row]);
        if (letter > 0) cap = std::min(cap, prev_before - placed_before);
        for (int x = cap; x >= 0; --x) {
            next[row] = shape[row] + x;
            counts[row] = x;
            fill_row(letter, row + 1, remaining - x, placed_before + x, prev_before + prev[row], shape, prev,
                     next, counts);
        }
        next[row] = shape[row];
        counts[row] = 0;
    }

    const Partition& mu_;
    std::size_t rows_;
    SchurTermSum& out_;
};

}  // namespace

SchurTermSum lr_product(const Partition& lambda, const Partition& mu, int max_length) {
    SchurTermSum out;
    if (max_length < 0) return out;
    const auto limit = static_cast<std::size_t>(max_length);
    if (lambda.length() > limit || mu.length() > limit) return out;
    LrEnumerator(mu, max_length, out).run(lambda);
    return out;
}

std::vector<Partition> partitions_in_box(int total, int max_rows, int max_part) {
    std::vector<Partition> out;
    if (total < 0) return out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int bound) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_rows) return;
        const int rows_left = max_rows - static_cast<int>(parts.size());
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            if (static_cast<long>(p) * rows_left < remaining) break;
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(total, max_part);
    return out;
}

SchurTermSum cauchy_exterior(int t, int mult, int rank) {
    SchurTermSum out;
    for (const Partition& mu : partitions_in_box(t, rank, mult))
        accumulate(out, mu, dim_schur(conjugate(mu), mult));
    return out;
}

std::vector<std::vector<int>> compositions(int t, const std::vector<int>& caps) {
    std::vector<std::vector<int>> out;
    if (t < 0) return out;
    std::vector<int> suffix_cap(caps.size() + 1, 0);
    for (std::size_t c = caps.size(); c-- > 0;) suffix_cap[c] = suffix_cap[c + 1] + std::max(caps[c], 0);
    std::vector<int> cur(caps.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int remaining) {
        if (c == caps.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const int lo = std::max(0, remaining - suffix_cap[c + 1]);
        const int hi = std::min(caps[c], remaining);
        for (int v = lo; v <= hi; ++v) {
            cur[c] = v;
            rec(c + 1, remaining - v);
        }
    };
    rec(0, t);
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace schubres
