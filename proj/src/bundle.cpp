#include "schubres/bundle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "schubres/bott.hpp"

namespace schubres {

BundleSpec::BundleSpec(int n, Multiplicities mult) : n_(n) {
    if (n < 1) throw std::invalid_argument("bundle ambient dimension must be positive");
    for (const auto& [i, m] : mult) {
        if (m < 0) throw std::invalid_argument("negative bundle multiplicity");
        if (m == 0) continue;
        if (i < 1 || i > n - 1)
            throw std::invalid_argument("bundle index " + std::to_string(i) + " outside 1..n-1");
        mult_.emplace(i, m);
    }
}

int BundleSpec::rank() const noexcept {
    int r = 0;
    for (const auto& [i, m] : mult_) r += i * m;
    return r;
}

int BundleSpec::total_multiplicity() const noexcept {
    int r = 0;
    for (const auto& [i, m] : mult_) r += m;
    return r;
}

int BundleSpec::min_index() const noexcept { return mult_.empty() ? 0 : mult_.begin()->first; }

std::string BundleSpec::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [i, m] : mult_) {
        os << (first ? "" : ", ") << i << ':' << m;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

// Pushforward of the Cauchy summands of one exterior power, tensored with a
// single carried partition. Shared across every branch carrying the same
// partition at the same level.
struct PushKey {
    Partition carried;
    int t;
    auto operator<=>(const PushKey&) const = default;
};

using PushImage = std::vector<std::tuple<int, Partition, BigInt>>;

PushImage push_one(const Partition& carried, const SchurTermSum& cauchy, int rank, int next_rank) {
    SchurTermSum tensored;
    for (const auto& [mu, d] : cauchy)
        for (const auto& [nu, c] : lr_product(carried, mu, rank)) accumulate(tensored, nu, d * c);
    PushImage out;
    for (const auto& [nu, coeff] : tensored) {
        auto res = cohom_schur_on_grass(nu, rank, next_rank);
        if (!res) continue;
        out.emplace_back(res->degree, res->partition(), coeff);
    }
    return out;
}

class LevelPusher {
public:
    LevelPusher(int mult, int rank, int next_rank) : mult_(mult), rank_(rank), next_rank_(next_rank) {}

    void push(const TermMap& in, int t, TermMap& out) {
        if (t < 0 || t > mult_ * rank_) return;
        for (const auto& [key, coeff] : in) {
            const auto& [degree, carried] = key;
            for (const auto& [delta, gamma, c] : image(carried, t)) {
                auto [it, inserted] = out.try_emplace({degree + delta, gamma}, coeff * c);
                if (!inserted) it->second += coeff * c;
            }
        }
    }

private:
    const PushImage& image(const Partition& carried, int t) {
        auto it = memo_.find(PushKey{carried, t});
        if (it != memo_.end()) return it->second;
        auto cauchy = cauchy_.find(t);
        if (cauchy == cauchy_.end()) cauchy = cauchy_.emplace(t, cauchy_exterior(t, mult_, rank_)).first;
        return memo_.emplace(PushKey{carried, t}, push_one(carried, cauchy->second, rank_, next_rank_))
            .first->second;
    }

    int mult_;
    int rank_;
    int next_rank_;
    std::map<int, SchurTermSum> cauchy_;
    std::map<PushKey, PushImage> memo_;
};

}  // namespace

TermMap push_level(const TermMap& in, int t, int mult, int rank, int next_rank) {
    TermMap out;
    LevelPusher(mult, rank, next_rank).push(in, t, out);
    return out;
}

BigInt CohomologyTable::dimension(int t, int j) const {
    auto it = entries.find({t, j});
    if (it == entries.end()) return 0;
    BigInt total = 0;
    for (const auto& [gamma, mult] : it->second) total += mult * dim_schur(gamma, n);
    return total;
}

int CohomologyTable::max_degree() const noexcept {
    int best = 0;
    for (const auto& [key, terms] : entries)
        if (!terms.empty()) best = std::max(best, key.second);
    return best;
}

BundleSpec build_bundle(const GrassPerm& w) { return BundleSpec(w.n(), bundle_multiplicities(w)); }

BundleSpec normalize_bundle(const BundleSpec& xi, int r) {
    Multiplicities mult = xi.multiplicities();
    if (!mult.empty() && mult.begin()->first < r)
        throw std::invalid_argument("normalize_bundle: bundle has an index below r");
    for (;;) {
        auto it = std::find_if(mult.begin(), mult.end(),
                               [r](const auto& entry) { return entry.first >= r + 1 && entry.second == 1; });
        if (it == mult.end()) break;
        const int i = it->first;
        mult.erase(it);
        ++mult[i - 1];
    }
    return BundleSpec(xi.n(), std::move(mult));
}

CohomologyTable cohomology_table(const BundleSpec& xi) {
    CohomologyTable table;
    table.n = xi.n();
    const int total_rank = xi.rank();

    // t accumulated so far -> pipeline terms
    std::map<int, TermMap> states;
    states[0][{0, Partition{}}] = 1;

    const auto& mult = xi.multiplicities();
    for (auto level = mult.begin(); level != mult.end(); ++level) {
        const int rank = level->first;
        const int copies = level->second;
        auto next = std::next(level);
        const int next_rank = next == mult.end() ? xi.n() : next->first;

        LevelPusher pusher(copies, rank, next_rank);
        std::map<int, TermMap> advanced;
        for (const auto& [t_prev, terms] : states) {
            const int cap = std::min(copies * rank, total_rank - t_prev);
            for (int t = 0; t <= cap; ++t) {
                TermMap& dest = advanced[t_prev + t];
                pusher.push(terms, t, dest);
            }
        }
        states = std::move(advanced);
    }

    for (const auto& [t, terms] : states) {
        for (const auto& [key, coeff] : terms) {
            if (coeff == 0) continue;
            accumulate(table.entries[{t, key.first}], key.second, coeff);
        }
    }
    std::erase_if(table.entries, [](const auto& entry) { return entry.second.empty(); });
    return table;
}

BigInt euler_characteristic(const CohomologyTable& table, int t) {
    BigInt chi = 0;
    for (const auto& [key, terms] : table.entries) {
        if (key.first != t) continue;
        const BigInt dim = table.dimension(key.first, key.second);
        if (key.second % 2 == 0)
            chi += dim;
        else
            chi -= dim;
    }
    return chi;
}

}  // namespace schubres
