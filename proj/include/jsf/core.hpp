#pragma once

#include <cstddef>
#include <vector>

#include "jsf/word.hpp"

namespace jsf {

/// Occurrence count of every alphabet letter, in alphabet order.
class ParikhVector {
public:
    ParikhVector() = default;
    explicit ParikhVector(std::vector<std::size_t> counts) : counts_(std::move(counts)) {}

    std::size_t size() const noexcept { return counts_.size(); }
    std::size_t operator[](std::size_t i) const { return counts_[i]; }
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

    /// Sum of all counts, i.e. the length of the word.
    std::size_t total() const noexcept;
    std::size_t min_count() const noexcept;
    std::size_t max_count() const noexcept;

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

private:
    std::vector<std::size_t> counts_;
};

enum class ParikhOrder { LessEq, GreaterEq, Equal, Incomparable };

const char* to_string(ParikhOrder order) noexcept;

/// Closed integer interval [lo, hi].
struct Interval {
    std::size_t lo = 0;
    std::size_t hi = 0;

    bool contains(std::size_t x) const noexcept { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Arch factorisation w = ar_1 ... ar_k r(w).
struct ArchFactorization {
    std::vector<Word> arches;
    Word rest;
    /// Last letters of the arches.
    Word model;

    std::size_t arch_count() const noexcept { return arches.size(); }
};

struct LcsfResult {
    std::size_t length = 0;
    Word witness;
};

ParikhVector parikh(const Word& w, const Alphabet& alphabet);

/// Throws AlphabetMismatch when the vectors have different lengths.
ParikhOrder compare_parikh(const ParikhVector& p, const ParikhVector& q);

/// p <= q componentwise (same length assumed).
bool dominated(const ParikhVector& p, const ParikhVector& q);

/// Left-greedy embedding test: is u a subsequence of w?
bool is_scattered_factor(const Word& u, const Word& w);

/// Length-only longest common scattered factor, O(|u||w|) time, O(|w|) space.
std::size_t lcsf_length(const Word& u, const Word& w);

/// Longest common scattered factor with a deterministic witness.
///
/// The witness is read off the full dynamic-programming table from the
/// bottom-right corner: a matching diagonal step is always taken; otherwise
/// a letter of u is dropped while that keeps the table value, and a letter
/// of w is dropped only when it does not.
LcsfResult lcsf(const Word& u, const Word& w);

/// p(u) <= p(w), compared as letter multisets.
bool is_jumbled_scatfact(const Word& u, const Word& w);

/// Jumble index |u| - lcsf(u, w). Throws NotJumbledScatFact if p(u) is not
/// dominated by p(w). The empty word has index 0.
std::size_t jumble_index(const Word& u, const Word& w);

/// u is a scattered factor of w with l jumbles: p(u) <= p(w), l <= |u| - 1
/// and lcsf(u, w) >= |u| - l. The empty word is 0-jumbled only.
bool is_l_jumbled(const Word& u, const Word& w, std::size_t l);

ArchFactorization arch_factorization(const Word& w, const Alphabet& alphabet);

/// iota(w): number of arches.
std::size_t universality_index(const Word& w, const Alphabet& alphabet);

/// min_a |w|_a - iota(w).
std::size_t potential(const Word& w, const Alphabet& alphabet);

}  // namespace jsf
