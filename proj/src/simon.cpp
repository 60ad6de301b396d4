#include "jsf/simon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jsf/core.hpp"
#include "jsf/errors.hpp"

namespace jsf {

namespace {

constexpr std::size_t kMaxReportedMembers = 32;

/// Longest run of letter a in w, and the start of its leftmost occurrence.
struct Run {
    std::size_t start = 0;
    std::size_t length = 0;
};

Run longest_run(const Word& w, Letter a) {
    Run best;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != a) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < w.size() && w[j] == a) ++j;
        if (j - i > best.length) best = {i, j - i};
        i = j;
    }
    return best;
}

Word extend_run(const Word& w, const Run& run) {
    return w.prefix(run.start + run.length) + w[run.start] + w.substr(run.start + run.length);
}

std::size_t count_letter(const Word& w, Letter a) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

}  // namespace

std::string Fingerprint::serialize() const {
    std::string out = "k=" + std::to_string(k) + ";l=" + std::to_string(l) + ";";
    for (std::size_t j = 0; j <= k; ++j) {
        out += '[';
        for (const auto& u : layer(j)) {
            const auto text = u.to_utf8();
            out += std::to_string(text.size()) + ':' + text;
        }
        out += ']';
    }
    return out;
}

Fingerprint fingerprint(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                        std::uint64_t cap) {
    alphabet.validate(w);
    require_budget(words_between(alphabet.size(), 0, k), cap);
    std::vector<WordSet> layers;
    layers.reserve(k + 1);
    for (std::size_t j = 0; j <= k; ++j) layers.emplace_back(alphabet, j);
    for_each_dominated(w, alphabet, 0, k, cap, [&](std::span<const Symbol> u, std::size_t delta) {
        if (delta <= l) layers[u.size()].push_sorted(alphabet.decode(u));
    });
    Fingerprint fp{k, l, std::move(layers.back()), {}};
    layers.pop_back();
    fp.shorter = std::move(layers);
    return fp;
}

bool equiv(const Word& v, const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
           std::uint64_t cap) {
    return fingerprint(v, alphabet, k, l, cap) == fingerprint(w, alphabet, k, l, cap);
}

std::optional<Word> distinguisher(const Word& v, const Word& w, const Alphabet& alphabet, std::size_t k,
                                  std::size_t l, std::uint64_t cap) {
    const auto fv = fingerprint(v, alphabet, k, l, cap);
    const auto fw = fingerprint(w, alphabet, k, l, cap);
    for (std::size_t j = 0; j <= k; ++j) {
        const auto a = set_difference(fv.layer(j), fw.layer(j));
        const auto b = set_difference(fw.layer(j), fv.layer(j));
        if (a.empty() && b.empty()) continue;
        if (a.empty()) return b[0];
        if (b.empty()) return a[0];
        return ShortlexLess(alphabet)(a[0], b[0]) ? a[0] : b[0];
    }
    return std::nullopt;
}

const char* to_string(ClassKind kind) noexcept {
    switch (kind) {
        case ClassKind::Singleton: return "Singleton";
        case ClassKind::ParikhClass: return "ParikhClass";
        case ClassKind::Infinite: return "Infinite";
        case ClassKind::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<Word> pump(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l) {
    alphabet.validate(w);
    const std::size_t min_block = std::max<std::size_t>(1, k > l ? k - l : 0);
    for (Letter a : alphabet.letters()) {
        if (count_letter(w, a) < k) continue;
        std::size_t i = 0;
        while (i < w.size()) {
            if (w[i] != a) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < w.size() && w[j] == a) ++j;
            if (j - i >= min_block) return extend_run(w, {i, j - i});
            i = j;
        }
    }
    return std::nullopt;
}

ClassVerdict classify(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                      std::size_t search_bound, std::uint64_t cap) {
    alphabet.validate(w);
    if (search_bound < w.size()) {
        throw InvalidArgument("search bound " + std::to_string(search_bound) +
                              " is shorter than the word itself");
    }
    try {
        if (auto pumped = pump(w, alphabet, k, l); pumped && equiv(w, *pumped, alphabet, k, l, cap)) {
            return {ClassKind::Infinite, InfiniteEvidence{*pumped}};
        }

        const auto counts = parikh(w, alphabet);
        if (k > 1 && l + 1 == k && counts.max_count() < k) {
            ParikhClassEvidence evidence{counts.max_count(), k, l, std::nullopt};
            if (permutation_count(counts) <= cap) evidence.members = permutation_class(w, alphabet, cap);
            return {ClassKind::ParikhClass, std::move(evidence)};
        }

        if (l == 0 && w.size() < k) {
            return {ClassKind::Singleton, SingletonEvidence{std::nullopt, true}};
        }

        require_budget(words_between(alphabet.size(), 0, search_bound), cap);
        const auto target = fingerprint(w, alphabet, k, l, cap);
        std::vector<Word> others;
        for (std::size_t n = 0; n <= search_bound; ++n) {
            for_each_word(alphabet, n, cap, [&](std::span<const Symbol> symbols) {
                if (others.size() >= kMaxReportedMembers) return;
                auto v = alphabet.decode(symbols);
                if (v == w) return;
                if (fingerprint(v, alphabet, k, l, cap) == target) others.push_back(std::move(v));
            });
        }
        if (others.empty()) {
            return {ClassKind::Singleton, SingletonEvidence{search_bound, false}};
        }
        return {ClassKind::Unknown, UnknownEvidence{search_bound, std::nullopt, std::move(others)}};
    } catch (const BudgetExceeded& e) {
        return {ClassKind::Unknown, UnknownEvidence{search_bound, e.cap(), {}}};
    }
}

Word common_extension(const Word& w, const Word& u, const Alphabet& alphabet, std::size_t k,
                      std::size_t l, std::uint64_t cap) {
    if (parikh(w, alphabet) == parikh(u, alphabet)) {
        throw HypothesisNotMet("common_extension requires p(w) != p(u)");
    }
    if (!equiv(w, u, alphabet, k, l, cap)) {
        throw HypothesisNotMet("common_extension requires w ~J_{k,l} u");
    }
    const std::size_t min_block = std::max<std::size_t>(1, k > l ? k - l : 0);
    for (Letter a : alphabet.letters()) {
        if (count_letter(w, a) < k || count_letter(u, a) < k) continue;
        const Run rw = longest_run(w, a);
        const Run ru = longest_run(u, a);
        if (rw.length < min_block || ru.length < min_block) continue;
        // Extending the longer block makes v differ from both inputs.
        Word v = ru.length > rw.length ? extend_run(u, ru) : extend_run(w, rw);
        if (v == w || v == u || !equiv(v, w, alphabet, k, l, cap) || !equiv(v, u, alphabet, k, l, cap)) {
            throw std::logic_error("common_extension: extended word '" + v.to_utf8() +
                                   "' is not a common equivalent");
        }
        return v;
    }
    throw HypothesisNotMet(
        "common_extension requires a letter occurring at least k times in both words with a block of "
        "length >= k - l in both");
}

bool parikh_equiv_check(const Word& w, const Word& w2, const Alphabet& alphabet, std::size_t k) {
    if (k <= 1) throw HypothesisNotMet("parikh_equiv_check requires k > 1");
    const auto p = parikh(w, alphabet);
    const auto q = parikh(w2, alphabet);
    if (p.max_count() >= k || q.max_count() >= k) {
        throw HypothesisNotMet("parikh_equiv_check requires every letter count below k");
    }
    return p == q;
}

LetterExtensionThreshold letter_extension_threshold(const Word& u, Letter a, const Alphabet& alphabet,
                                                    std::size_t l, std::uint64_t cap) {
    if (!alphabet.contains(a)) {
        throw AlphabetViolation("extension letter is not in the alphabet {" + alphabet.to_utf8() + "}");
    }
    const std::size_t top = u.size() + 1;
    const auto fu = fingerprint(u, alphabet, top, l, cap);
    const auto fua = fingerprint(u + a, alphabet, top, l, cap);
    std::size_t first_diff = 0;
    while (first_diff <= top && fu.layer(first_diff) == fua.layer(first_diff)) ++first_diff;
    if (first_diff == 0 || first_diff > top) {
        throw std::logic_error("letter_extension_threshold: layers of u and ua behave unexpectedly");
    }

    LetterExtensionThreshold result;
    result.p = first_diff - 1;
    const auto& next_layer = fu.layer(result.p + 1);
    for (const auto& s : fu.layer(result.p)) {
        if (!next_layer.contains(s + a)) {
            result.s = s;
            break;
        }
    }
    return result;
}

std::vector<WordSet> partition(const Alphabet& alphabet, std::size_t n, std::size_t k, std::size_t l,
                               std::uint64_t cap) {
    require_budget(words_between(alphabet.size(), 0, n), cap);
    std::map<std::string, std::vector<Word>> groups;
    for (std::size_t len = 0; len <= n; ++len) {
        for_each_word(alphabet, len, cap, [&](std::span<const Symbol> symbols) {
            auto v = alphabet.decode(symbols);
            groups[fingerprint(v, alphabet, k, l, cap).serialize()].push_back(std::move(v));
        });
    }
    std::vector<WordSet> classes;
    classes.reserve(groups.size());
    for (auto& [key, words] : groups) {
        WordSet set(alphabet);
        for (auto& v : words) set.push_sorted(std::move(v));
        classes.push_back(std::move(set));
    }
    ShortlexLess less(alphabet);
    std::sort(classes.begin(), classes.end(),
              [&](const WordSet& x, const WordSet& y) { return less(x[0], y[0]); });
    return classes;
}

}  // namespace jsf
