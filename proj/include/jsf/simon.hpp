#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jsf/enumerate.hpp"
#include "jsf/word.hpp"

namespace jsf {

/// Canonical identifier of the ~J_{k,l} class of a word.
///
/// `members` is the length-k layer: the u in Sigma^k with p(u) <= p(w) and
/// delta_w(u) <= l. `shorter[j]` is the same layer for length j < k. Two words
/// are ~J_{k,l}-equivalent exactly when their fingerprints compare equal.
/// For words of length at least k the length-k layer alone already decides
/// equivalence; the shorter layers are needed to separate short words,
/// whose length-k layers are all empty.
struct Fingerprint {
    std::size_t k = 0;
    std::size_t l = 0;
    WordSet members;
    std::vector<WordSet> shorter;

    const Alphabet& alphabet() const noexcept { return members.alphabet(); }

    /// Layer of length j <= k.
    const WordSet& layer(std::size_t j) const { return j == k ? members : shorter.at(j); }

    /// Canonical text form; equal fingerprints serialize identically.
    std::string serialize() const;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                        std::uint64_t cap = kDefaultCap);

/// v ~J_{k,l} w.
bool equiv(const Word& v, const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
           std::uint64_t cap = kDefaultCap);

/// Shortlex-smallest word in the symmetric difference of the fingerprints,
/// or nothing when v ~J_{k,l} w.
std::optional<Word> distinguisher(const Word& v, const Word& w, const Alphabet& alphabet, std::size_t k,
                                  std::size_t l, std::uint64_t cap = kDefaultCap);

enum class ClassKind { Singleton, ParikhClass, Infinite, Unknown };

const char* to_string(ClassKind kind) noexcept;

struct SingletonEvidence {
    /// No other member exists among words of length <= search_bound; unset
    /// when the class is certified a singleton unconditionally.
    std::optional<std::size_t> search_bound;
    /// Short-word certificate: |w| < k with l = 0.
    bool short_word = false;
};

struct ParikhClassEvidence {
    std::size_t max_count = 0;
    std::size_t k = 0;
    std::size_t l = 0;
    /// Pi(w), when it fits in the enumeration cap.
    std::optional<WordSet> members;
};

struct InfiniteEvidence {
    Word pumped;
};

struct UnknownEvidence {
    std::size_t search_bound = 0;
    /// Set when an enumeration ran out of budget.
    std::optional<std::uint64_t> exhausted_cap;
    /// Other members found by the bounded search (without a certificate).
    std::vector<Word> other_members;
};

using ClassEvidence = std::variant<SingletonEvidence, ParikhClassEvidence, InfiniteEvidence, UnknownEvidence>;

struct ClassVerdict {
    ClassKind kind = ClassKind::Unknown;
    ClassEvidence evidence;
};

/// Size class of [w]_{k,l}. Certificates are tried in the order pump
/// (Infinite), Parikh criterion (ParikhClass), short word, then an
/// exhaustive search over Sigma^{<= search_bound}.
ClassVerdict classify(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                      std::size_t search_bound, std::uint64_t cap = kDefaultCap);

/// If w = x a^{k'} y with k' >= k - l and |w|_a >= k, returns x a^{k'+1} y.
/// Letters are tried in alphabet order and, per letter, the leftmost maximal
/// block that qualifies is extended.
std::optional<Word> pump(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l);

/// A third word v (not w, not u) equivalent to both w and u, obtained by
/// extending a qualifying letter block. Throws HypothesisNotMet naming the
/// failed clause.
Word common_extension(const Word& w, const Word& u, const Alphabet& alphabet, std::size_t k,
                      std::size_t l, std::uint64_t cap = kDefaultCap);

/// p(w) == p(w') for words whose letter counts are all below k (k > 1).
/// Throws HypothesisNotMet otherwise.
bool parikh_equiv_check(const Word& w, const Word& w2, const Alphabet& alphabet, std::size_t k);

struct LetterExtensionThreshold {
    /// Greatest p with u ~J_{p,l} ua.
    std::size_t p = 0;
    /// Smallest s in Sigma^p with p(s) <= p(u), delta_u(s) <= l and sa outside
    /// the length-(p+1) layer of u.
    std::optional<Word> s;
};

LetterExtensionThreshold letter_extension_threshold(const Word& u, Letter a, const Alphabet& alphabet,
                                                    std::size_t l, std::uint64_t cap = kDefaultCap);

/// Partition of Sigma^{<= n} into ~J_{k,l} classes. Each class is in
/// shortlex order; classes are ordered by their smallest member.
std::vector<WordSet> partition(const Alphabet& alphabet, std::size_t n, std::size_t k, std::size_t l,
                               std::uint64_t cap = kDefaultCap);

}  // namespace jsf
