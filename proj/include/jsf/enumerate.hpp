#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "jsf/core.hpp"
#include "jsf/word.hpp"

namespace jsf {

/// Default bound on the number of candidate words a single call may scan.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// sigma^k, saturating at UINT64_MAX.
std::uint64_t power_count(std::size_t sigma, std::size_t k) noexcept;

/// |Sigma^lo| + ... + |Sigma^hi|, saturating.
std::uint64_t words_between(std::size_t sigma, std::size_t lo, std::size_t hi) noexcept;

/// Throws BudgetExceeded when required > cap.
void require_budget(std::uint64_t required, std::uint64_t cap);

/// Sorted, duplicate-free set of words over an alphabet.
///
/// Elements are kept in shortlex order (plain lexicographic order when all
/// elements share one length). When a length class is set every element has
/// exactly that length.
class WordSet {
public:
    explicit WordSet(Alphabet alphabet, std::optional<std::size_t> length_class = std::nullopt)
        : alphabet_(std::move(alphabet)), length_class_(length_class) {}

    /// Validates, sorts and deduplicates.
    static WordSet from_words(Alphabet alphabet, std::vector<Word> words,
                              std::optional<std::size_t> length_class = std::nullopt);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::optional<std::size_t> length_class() const noexcept { return length_class_; }
    const std::vector<Word>& elements() const noexcept { return elements_; }

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }
    const Word& operator[](std::size_t i) const { return elements_[i]; }

    bool contains(const Word& u) const;

    /// Appends a word that is strictly greater than the current last element.
    /// Used by builders that generate in canonical order.
    void push_sorted(Word u);

    friend bool operator==(const WordSet& a, const WordSet& b) {
        return a.alphabet_ == b.alphabet_ && a.elements_ == b.elements_;
    }

private:
    Alphabet alphabet_;
    std::optional<std::size_t> length_class_;
    std::vector<Word> elements_;
};

WordSet set_union(const WordSet& a, const WordSet& b);
WordSet set_difference(const WordSet& a, const WordSet& b);
WordSet set_intersection(const WordSet& a, const WordSet& b);

/// Visits Sigma^k in lexicographic order.
void for_each_word(const Alphabet& alphabet, std::size_t k, std::uint64_t cap,
                   const std::function<void(std::span<const Symbol>)>& visit);

/// Visits every u with min_len <= |u| <= max_len and p(u) <= p(w), together
/// with delta_w(u), in lexicographic (prefix-first) order. Words are grown
/// letter by letter; one row of the lcsf table is kept per depth so each
/// visited word costs O(|w|). The budget is the size of Sigma^{min_len..max_len}.
void for_each_dominated(const Word& w, const Alphabet& alphabet, std::size_t min_len,
                        std::size_t max_len, std::uint64_t cap,
                        const std::function<void(std::span<const Symbol>, std::size_t)>& visit);

/// ScatFact_k(w). Empty when k > |w|.
WordSet scatfacts(const Word& w, const Alphabet& alphabet, std::size_t k);

/// JScatFact_k(w, l): u in Sigma^k with p(u) <= p(w), delta_w(u) <= l and
/// l <= k - 1 (for k = 0 the set is {eps} exactly when l = 0).
WordSet jscatfacts(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                   std::uint64_t cap = kDefaultCap);

/// SJSF_k(w, l): as jscatfacts but with delta_w(u) = l.
WordSet sjsf(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
             std::uint64_t cap = kDefaultCap);

/// [delta_w(u), |u| - 1]; [0, 0] for the empty word.
Interval jumble_spectrum(const Word& u, const Word& w);

/// Number of distinct permutations of w, saturating.
std::uint64_t permutation_count(const ParikhVector& p) noexcept;

/// Pi(w): all distinct permutations of w.
WordSet permutation_class(const Word& w, const Alphabet& alphabet, std::uint64_t cap = kDefaultCap);

}  // namespace jsf
