#include "jsf/universality.hpp"

#include <algorithm>

#include "jsf/errors.hpp"

namespace jsf {

namespace {

/// Number of u in Sigma^k covered with at most l jumbles, for every l up to k.
std::vector<std::uint64_t> covered_by_delta(const Word& w, const Alphabet& alphabet, std::size_t k,
                                            std::uint64_t cap) {
    std::vector<std::uint64_t> exact(k + 1, 0);
    for_each_dominated(w, alphabet, k, k, cap,
                       [&](std::span<const Symbol>, std::size_t delta) { ++exact[delta]; });
    for (std::size_t l = 1; l <= k; ++l) exact[l] += exact[l - 1];
    return exact;
}

void check_wx_hypotheses(const Word& w, const Alphabet& alphabet, const ArchFactorization& arches) {
    const std::size_t k = arches.arch_count();
    if (k == 0) throw HypothesisNotMet("requires iota(w) >= 1");
    const auto counts = parikh(w, alphabet);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < k + 1) {
            throw HypothesisNotMet("requires |w|_a >= iota(w) + 1 = " + std::to_string(k + 1) +
                                   " for every letter a, but letter '" +
                                   encode_utf8(std::u32string(1, alphabet.letter(static_cast<Symbol>(i)))) +
                                   "' occurs " + std::to_string(counts[i]) + " times");
        }
    }
}

}  // namespace

Interval valid_k_range(const Word& w, const Alphabet& alphabet) {
    const auto counts = parikh(w, alphabet);
    return {universality_index(w, alphabet), counts.min_count()};
}

bool is_jumble_universal(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                         std::uint64_t cap) {
    require_budget(power_count(alphabet.size(), k), cap);
    const auto covered = covered_by_delta(w, alphabet, k, cap);
    return covered[std::min(l, k)] == power_count(alphabet.size(), k);
}

std::size_t min_jumbles(const Word& w, const Alphabet& alphabet, std::size_t k, std::uint64_t cap) {
    const auto range = valid_k_range(w, alphabet);
    if (!range.contains(k)) {
        throw NoSolution("k = " + std::to_string(k) + " lies outside the valid range [" +
                         std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]");
    }
    std::size_t worst = 0;
    for_each_dominated(w, alphabet, k, k, cap,
                       [&](std::span<const Symbol>, std::size_t delta) { worst = std::max(worst, delta); });
    return worst;
}

UniversalityReport universality_report(const Word& w, const Alphabet& alphabet, std::size_t k,
                                       std::uint64_t cap) {
    UniversalityReport report;
    report.k = k;
    report.valid_k_range = valid_k_range(w, alphabet);
    report.min_jumbles = min_jumbles(w, alphabet, k, cap);
    const auto total = power_count(alphabet.size(), k);
    const auto covered = covered_by_delta(w, alphabet, k, cap);
    for (std::size_t l = 0; l <= report.min_jumbles; ++l) report.missing_at.push_back(total - covered[l]);
    return report;
}

WordSet missing_words(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                      std::uint64_t cap) {
    alphabet.validate(w);
    WordSet covered(alphabet, k);
    for_each_dominated(w, alphabet, k, k, cap, [&](std::span<const Symbol> u, std::size_t delta) {
        if (delta <= l) covered.push_sorted(alphabet.decode(u));
    });
    WordSet missing(alphabet, k);
    std::size_t next = 0;
    for_each_word(alphabet, k, cap, [&](std::span<const Symbol> symbols) {
        auto u = alphabet.decode(symbols);
        if (next < covered.size() && covered[next] == u) {
            ++next;
            return;
        }
        missing.push_sorted(std::move(u));
    });
    return missing;
}

Word construct_wx(const Word& w, const Alphabet& alphabet, Letter x) {
    if (!alphabet.contains(x)) {
        throw HypothesisNotMet("requires x in the alphabet {" + alphabet.to_utf8() + "}");
    }
    const auto arches = arch_factorization(w, alphabet);
    check_wx_hypotheses(w, alphabet, arches);
    if (std::find(arches.rest.begin(), arches.rest.end(), x) != arches.rest.end()) {
        throw HypothesisNotMet("requires x not in alph(r(w)) = alph('" + arches.rest.to_utf8() + "')");
    }

    for (std::size_t i = 0; i < arches.arch_count(); ++i) {
        const Word& arch = arches.arches[i];
        if (std::count(arch.begin(), arch.end(), x) < 2) continue;
        const auto split = static_cast<std::size_t>(std::find(arch.begin(), arch.end(), x) - arch.begin());
        Word result;
        for (std::size_t j = 0; j < i; ++j) result += arches.arches[j];
        result += arch.prefix(split);
        result += arch.substr(split + 1);
        for (std::size_t j = i + 1; j < arches.arch_count(); ++j) result += arches.arches[j];
        result += x;
        result += arches.rest;
        return result;
    }
    // Unreachable under the hypotheses: k + 1 occurrences of x outside r(w)
    // spread over k arches put two of them in one arch.
    throw HypothesisNotMet("no arch contains x twice");
}

WordSet one_jumble_set(const Word& w, const Alphabet& alphabet) {
    const auto arches = arch_factorization(w, alphabet);
    const std::size_t k = arches.arch_count();
    const auto counts = parikh(w, alphabet);
    if (counts.min_count() < k + 1) {
        throw HypothesisNotMet("requires |w|_a >= iota(w) + 1 = " + std::to_string(k + 1) +
                               " for every letter a");
    }

    std::u32string outside_rest;
    for (Letter a : alphabet.letters()) {
        if (std::find(arches.rest.begin(), arches.rest.end(), a) == arches.rest.end()) outside_rest.push_back(a);
    }

    const auto prefixes = scatfacts(w, alphabet, k);
    const auto longer = scatfacts(w, alphabet, k + 1);
    WordSet result(alphabet, k + 1);
    for (const auto& v : prefixes) {
        for (Letter x : outside_rest) {
            Word u = v + x;
            if (!longer.contains(u)) result.push_sorted(std::move(u));
        }
    }
    return result;
}

}  // namespace jsf
