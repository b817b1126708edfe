#include "schubres/bott.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schubres {

std::optional<BottResult> bott(const Weight& alpha) {
    const int d = static_cast<int>(alpha.size());
    if (d == 0) throw std::invalid_argument("weight must have at least one entry");
    std::vector<int> beta(alpha.size());
    for (int i = 0; i < d; ++i) beta[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] + (d - 1 - i);

    int inversions = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const int bi = beta[static_cast<std::size_t>(i)];
            const int bj = beta[static_cast<std::size_t>(j)];
            if (bi == bj) return std::nullopt;
            if (bi < bj) ++inversions;
        }
    }
    std::sort(beta.begin(), beta.end(), std::greater<>());
    for (int i = 0; i < d; ++i) beta[static_cast<std::size_t>(i)] -= d - 1 - i;
    return BottResult{inversions, std::move(beta)};
}

std::optional<BottResult> bott_by_exchange(Weight alpha) {
    if (alpha.empty()) throw std::invalid_argument("weight must have at least one entry");
    int steps = 0;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < alpha.size() && alpha[i] >= alpha[i + 1]) ++i;
        if (i + 1 == alpha.size()) return BottResult{steps, std::move(alpha)};
        if (alpha[i + 1] == alpha[i] + 1) return std::nullopt;
        const int a = alpha[i];
        alpha[i] = alpha[i + 1] - 1;
        alpha[i + 1] = a + 1;
        ++steps;
    }
}

std::optional<BottResult> cohom_schur_on_grass(const Partition& lambda, int j, int d) {
    if (static_cast<int>(lambda.length()) > j) throw std::invalid_argument("partition exceeds bundle rank");
    if (j < 0 || j > d || d < 1) throw std::invalid_argument("need 0 <= j <= d and d >= 1");
    Weight alpha(static_cast<std::size_t>(d - j), 0);
    const auto tail = lambda.padded(static_cast<std::size_t>(j));
    alpha.insert(alpha.end(), tail.begin(), tail.end());
    return bott(alpha);
}

}  // namespace schubres
