#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jsf/core.hpp"
#include "jsf/enumerate.hpp"
#include "jsf/word.hpp"

namespace jsf {

/// Coverage of Sigma^k by the jumbled scattered factors of a word.
struct UniversalityReport {
    std::size_t k = 0;
    std::size_t min_jumbles = 0;
    Interval valid_k_range;
    /// missing_at[l] = |Sigma^k| - |{u : p(u) <= p(w), delta_w(u) <= l}|,
    /// for l = 0 .. min_jumbles.
    std::vector<std::uint64_t> missing_at;
};

/// [iota(w), min_a |w|_a]. Both ends are 0 when w misses a letter.
Interval valid_k_range(const Word& w, const Alphabet& alphabet);

/// Every u in Sigma^k is a jumbled scattered factor of w with at most l jumbles.
bool is_jumble_universal(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                         std::uint64_t cap = kDefaultCap);

/// Smallest l making w l-jumble k-universal, i.e. max_{u in Sigma^k} delta_w(u).
/// Throws NoSolution when k lies outside valid_k_range(w).
std::size_t min_jumbles(const Word& w, const Alphabet& alphabet, std::size_t k,
                        std::uint64_t cap = kDefaultCap);

UniversalityReport universality_report(const Word& w, const Alphabet& alphabet, std::size_t k,
                                       std::uint64_t cap = kDefaultCap);

/// Sigma^k minus the words covered with at most l jumbles.
WordSet missing_words(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                      std::uint64_t cap = kDefaultCap);

/// Moves one superfluous occurrence of x out of the first arch that holds it
/// twice and appends it right before the rest:
///
///   w   = ar_1 .. ar_{i-1} (alpha x beta) ar_{i+1} .. ar_k r(w)
///   w_x = ar_1 .. ar_{i-1} (alpha beta) ar_{i+1} .. ar_k x r(w)
///
/// where i is the smallest arch index with |ar_i|_x > 1 and x does not occur
/// in alpha. Requires iota(w) = k >= 1, |w|_a >= k + 1 for every letter, and
/// x not in alph(r(w)); otherwise throws HypothesisNotMet.
Word construct_wx(const Word& w, const Alphabet& alphabet, Letter x);

/// SJSF_{k+1}(w, 1) for iota(w) = k and all counts >= k + 1, via the closed
/// form (ScatFact_k(w) . (Sigma \ alph(r(w)))) \ ScatFact_{k+1}(w).
WordSet one_jumble_set(const Word& w, const Alphabet& alphabet);

}  // namespace jsf
