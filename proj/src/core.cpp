#include "jsf/core.hpp"

#include <algorithm>
#include <numeric>

#include "jsf/errors.hpp"

namespace jsf {

std::size_t ParikhVector::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t ParikhVector::min_count() const noexcept {
    return counts_.empty() ? 0 : *std::min_element(counts_.begin(), counts_.end());
}

std::size_t ParikhVector::max_count() const noexcept {
    return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

const char* to_string(ParikhOrder order) noexcept {
    switch (order) {
        case ParikhOrder::LessEq: return "LessEq";
        case ParikhOrder::GreaterEq: return "GreaterEq";
        case ParikhOrder::Equal: return "Equal";
        case ParikhOrder::Incomparable: return "Incomparable";
    }
    return "?";
}

ParikhVector parikh(const Word& w, const Alphabet& alphabet) {
    std::vector<std::size_t> counts(alphabet.size(), 0);
    for (Symbol s : alphabet.encode(w)) ++counts[s];
    return ParikhVector(std::move(counts));
}

ParikhOrder compare_parikh(const ParikhVector& p, const ParikhVector& q) {
    if (p.size() != q.size()) {
        throw AlphabetMismatch("Parikh vectors over alphabets of size " + std::to_string(p.size()) +
                               " and " + std::to_string(q.size()));
    }
    bool below = false;
    bool above = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        below = below || p[i] < q[i];
        above = above || p[i] > q[i];
    }
    if (below && above) return ParikhOrder::Incomparable;
    if (below) return ParikhOrder::LessEq;
    if (above) return ParikhOrder::GreaterEq;
    return ParikhOrder::Equal;
}

bool dominated(const ParikhVector& p, const ParikhVector& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > q[i]) return false;
    }
    return true;
}

bool is_scattered_factor(const Word& u, const Word& w) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < u.size(); ++j) {
        if (u[i] == w[j]) ++i;
    }
    return i == u.size();
}

std::size_t lcsf_length(const Word& u, const Word& w) {
    std::vector<std::size_t> prev(w.size() + 1, 0), cur(w.size() + 1, 0);
    for (std::size_t i = 1; i <= u.size(); ++i) {
        for (std::size_t j = 1; j <= w.size(); ++j) {
            cur[j] = u[i - 1] == w[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[w.size()];
}

LcsfResult lcsf(const Word& u, const Word& w) {
    const std::size_t n = u.size();
    const std::size_t m = w.size();
    std::vector<std::size_t> table((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return table[i * (m + 1) + j]; };
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            at(i, j) = u[i - 1] == w[j - 1] ? at(i - 1, j - 1) + 1 : std::max(at(i - 1, j), at(i, j - 1));
        }
    }

    std::u32string reversed;
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 && j > 0) {
        if (u[i - 1] == w[j - 1]) {
            reversed.push_back(u[i - 1]);
            --i;
            --j;
        } else if (at(i - 1, j) == at(i, j)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return {at(n, m), Word(std::move(reversed))};
}

bool is_jumbled_scatfact(const Word& u, const Word& w) {
    if (u.size() > w.size()) return false;
    std::u32string a = u.letters();
    std::u32string b = w.letters();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t jumble_index(const Word& u, const Word& w) {
    if (!is_jumbled_scatfact(u, w)) {
        throw NotJumbledScatFact("'" + u.to_utf8() + "' is not a jumbled scattered factor of '" +
                                 w.to_utf8() + "'");
    }
    return u.size() - lcsf_length(u, w);
}

bool is_l_jumbled(const Word& u, const Word& w, std::size_t l) {
    if (!is_jumbled_scatfact(u, w)) return false;
    if (u.empty()) return l == 0;
    if (l + 1 > u.size()) return false;
    return lcsf_length(u, w) + l >= u.size();
}

ArchFactorization arch_factorization(const Word& w, const Alphabet& alphabet) {
    const auto symbols = alphabet.encode(w);
    ArchFactorization result;
    std::vector<bool> seen(alphabet.size(), false);
    std::size_t distinct = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (!seen[symbols[i]]) {
            seen[symbols[i]] = true;
            ++distinct;
        }
        if (distinct == alphabet.size()) {
            result.arches.push_back(w.substr(start, i + 1 - start));
            result.model += w[i];
            std::fill(seen.begin(), seen.end(), false);
            distinct = 0;
            start = i + 1;
        }
    }
    result.rest = w.substr(start);
    return result;
}

std::size_t universality_index(const Word& w, const Alphabet& alphabet) {
    return arch_factorization(w, alphabet).arch_count();
}

std::size_t potential(const Word& w, const Alphabet& alphabet) {
    return parikh(w, alphabet).min_count() - universality_index(w, alphabet);
}

}  // namespace jsf
