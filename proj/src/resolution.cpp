#include "schubres/resolution.hpp"

#include <algorithm>

namespace schubres {

BigInt BettiTable::rank(int i, int d) const {
    auto it = entries.find({i, d});
    return it == entries.end() ? BigInt(0) : it->second;
}

int BettiTable::length() const noexcept {
    int best = 0;
    for (const auto& [key, value] : entries)
        if (value != 0) best = std::max(best, key.first);
    return best;
}

BigInt BettiTable::total(int i) const {
    BigInt sum = 0;
    for (const auto& [key, value] : entries)
        if (key.first == i) sum += value;
    return sum;
}

BettiTable betti_from_cohomology(const CohomologyTable& table) {
    BettiTable betti;
    for (const auto& [key, terms] : table.entries) {
        const auto [t, j] = key;
        if (j > t)
            throw ConsistencyError("not a resolution: negative homological index (t=" + std::to_string(t) +
                                   ", j=" + std::to_string(j) + ")");
        const BigInt dim = table.dimension(t, j);
        if (dim == 0) continue;
        betti.entries[{t - j, t}] += dim;
    }
    return betti;
}

std::vector<BigInt> divide_by_one_minus_t(std::vector<BigInt> p, int times) {
    for (int round = 0; round < times; ++round) {
        // p = (1 - t) q  <=>  q_k = p_0 + ... + p_k, with p(1) = 0
        BigInt running = 0;
        std::vector<BigInt> q;
        for (std::size_t k = 0; k < p.size(); ++k) {
            running += p[k];
            if (k + 1 < p.size()) q.push_back(running);
        }
        if (running != 0 || p.empty())
            throw ConsistencyError("numerator not divisible by (1-t)^" + std::to_string(times));
        while (!q.empty() && q.back() == 0) q.pop_back();
        p = std::move(q);
    }
    return p;
}

HilbertData hilbert_data(const BettiTable& betti, const GrassPerm& w) {
    HilbertData h;
    h.ambient = w.m() * w.n();
    h.codim = h.ambient - length(w);
    for (const auto& [key, value] : betti.entries) {
        const auto [i, d] = key;
        if (static_cast<std::size_t>(d) >= h.numerator.size()) h.numerator.resize(static_cast<std::size_t>(d) + 1);
        if (i % 2 == 0)
            h.numerator[static_cast<std::size_t>(d)] += value;
        else
            h.numerator[static_cast<std::size_t>(d)] -= value;
    }
    while (!h.numerator.empty() && h.numerator.back() == 0) h.numerator.pop_back();
    h.reduced_numerator = divide_by_one_minus_t(h.numerator, h.codim);
    h.multiplicity = 0;
    for (const auto& c : h.reduced_numerator) h.multiplicity += c;
    return h;
}

int regularity(const CohomologyTable& table) { return table.max_degree(); }

int conjectured_regularity(const GrassPerm& w) {
    int reg = 0;
    for (const auto& [i, m] : bundle_multiplicities(w)) reg += (m - 1) * i;
    return reg;
}

bool ValidationReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ValidationReport::find(const std::string& id) const noexcept {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
    return it == checks.end() ? nullptr : &*it;
}

ValidationReport validate(const BettiTable& betti, const GrassPerm& w) {
    ValidationReport report;
    const int codim = w.m() * w.n() - length(w);

    BigInt alternating = 0;
    for (int i = 0; i <= betti.length(); ++i) {
        if (i % 2 == 0)
            alternating += betti.total(i);
        else
            alternating -= betti.total(i);
    }
    report.checks.push_back({"alternating_sum", codim == 0 || alternating == 0,
                             "sum of (-1)^i rank F_i = " + to_decimal(alternating)});

    bool f0_ok = betti.rank(0, 0) == 1;
    for (const auto& [key, value] : betti.entries)
        if (key.first == 0 && key.second != 0 && value != 0) f0_ok = false;
    report.checks.push_back({"f0_is_r", f0_ok, "beta_{0,0} = " + to_decimal(betti.rank(0, 0))});

    report.checks.push_back(
        {"no_linear_forms", betti.rank(1, 1) == 0, "beta_{1,1} = " + to_decimal(betti.rank(1, 1))});

    report.checks.push_back({"length_is_codim", betti.length() == codim,
                             "length " + std::to_string(betti.length()) + ", codim " + std::to_string(codim)});

    Check divisible{"hilbert_divisible", true, "numerator divisible by (1-t)^" + std::to_string(codim)};
    try {
        (void)hilbert_data(betti, w);
    } catch (const ConsistencyError& e) {
        divisible.passed = false;
        divisible.detail = e.what();
    }
    report.checks.push_back(std::move(divisible));
    return report;
}

ResolutionReport resolve(const GrassPerm& w, bool normalize) {
    BundleSpec bundle = build_bundle(w);
    const int r = r_of(w);
    BundleSpec computed = normalize ? normalize_bundle(bundle, r) : bundle;
    CohomologyTable cohomology = cohomology_table(computed);
    BettiTable betti = betti_from_cohomology(cohomology);

    std::optional<HilbertData> hilbert;
    std::string hilbert_error;
    try {
        hilbert = hilbert_data(betti, w);
    } catch (const ConsistencyError& e) {
        hilbert_error = e.what();
    }
    const int reg = regularity(cohomology);
    ValidationReport checks = validate(betti, w);
    return ResolutionReport{w,
                            r,
                            std::move(bundle),
                            std::move(computed),
                            std::move(cohomology),
                            std::move(betti),
                            std::move(hilbert),
                            std::move(hilbert_error),
                            reg,
                            conjectured_regularity(w),
                            std::move(checks)};
}

}  // namespace schubres
