#include "jsf/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "jsf/errors.hpp"

namespace jsf {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
    return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

}  // namespace

std::uint64_t power_count(std::size_t sigma, std::size_t k) noexcept {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < k && result != kSaturated; ++i) result = saturating_mul(result, sigma);
    return result;
}

std::uint64_t words_between(std::size_t sigma, std::size_t lo, std::size_t hi) noexcept {
    std::uint64_t total = 0;
    for (std::size_t k = lo; k <= hi && total != kSaturated; ++k) {
        total = saturating_add(total, power_count(sigma, k));
    }
    return total;
}

void require_budget(std::uint64_t required, std::uint64_t cap) {
    if (required > cap) throw BudgetExceeded(required, cap);
}

WordSet WordSet::from_words(Alphabet alphabet, std::vector<Word> words,
                            std::optional<std::size_t> length_class) {
    for (const auto& u : words) {
        alphabet.validate(u);
        if (length_class && u.size() != *length_class) {
            throw InvalidArgument("word '" + u.to_utf8() + "' does not have length " +
                                  std::to_string(*length_class));
        }
    }
    ShortlexLess less(alphabet);
    std::sort(words.begin(), words.end(), less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    WordSet set(std::move(alphabet), length_class);
    set.elements_ = std::move(words);
    return set;
}

bool WordSet::contains(const Word& u) const {
    return std::binary_search(elements_.begin(), elements_.end(), u, ShortlexLess(alphabet_));
}

void WordSet::push_sorted(Word u) {
    if (!elements_.empty() && !ShortlexLess(alphabet_)(elements_.back(), u)) {
        throw InvalidArgument("push_sorted: '" + u.to_utf8() + "' breaks the canonical order");
    }
    elements_.push_back(std::move(u));
}

namespace {

template <typename Merge>
WordSet merge_sets(const WordSet& a, const WordSet& b, Merge merge) {
    if (!(a.alphabet() == b.alphabet())) {
        throw AlphabetMismatch("word sets over different alphabets");
    }
    std::vector<Word> out;
    merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), ShortlexLess(a.alphabet()));
    auto length = a.length_class() == b.length_class() ? a.length_class() : std::nullopt;
    WordSet result(a.alphabet(), length);
    for (auto& u : out) result.push_sorted(std::move(u));
    return result;
}

}  // namespace

WordSet set_union(const WordSet& a, const WordSet& b) {
    return merge_sets(a, b, [](auto... args) { return std::set_union(args...); });
}

WordSet set_difference(const WordSet& a, const WordSet& b) {
    return merge_sets(a, b, [](auto... args) { return std::set_difference(args...); });
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
    return merge_sets(a, b, [](auto... args) { return std::set_intersection(args...); });
}

void for_each_word(const Alphabet& alphabet, std::size_t k, std::uint64_t cap,
                   const std::function<void(std::span<const Symbol>)>& visit) {
    require_budget(power_count(alphabet.size(), k), cap);
    const auto sigma = static_cast<Symbol>(alphabet.size());
    std::vector<Symbol> u(k, 0);
    while (true) {
        visit(u);
        std::size_t i = k;
        while (i > 0 && u[i - 1] + 1 == sigma) u[--i] = 0;
        if (i == 0) return;
        ++u[i - 1];
    }
}

namespace {

struct DominatedWalk {
    std::span<const Symbol> w;
    std::size_t sigma;
    std::size_t min_len;
    std::size_t max_len;
    const std::function<void(std::span<const Symbol>, std::size_t)>& visit;

    std::vector<std::size_t> remaining;
    std::vector<Symbol> u;
    // rows[d][j] = lcsf(u[0..d), w[0..j))
    std::vector<std::vector<std::size_t>> rows;

    void run() {
        rows.assign(max_len + 1, std::vector<std::size_t>(w.size() + 1, 0));
        u.reserve(max_len);
        descend(0);
    }

    void descend(std::size_t depth) {
        if (depth >= min_len) visit(u, depth - rows[depth][w.size()]);
        if (depth == max_len) return;
        const auto& prev = rows[depth];
        auto& next = rows[depth + 1];
        for (Symbol c = 0; c < sigma; ++c) {
            if (remaining[c] == 0) continue;
            next[0] = 0;
            for (std::size_t j = 1; j <= w.size(); ++j) {
                next[j] = w[j - 1] == c ? prev[j - 1] + 1 : std::max(prev[j], next[j - 1]);
            }
            --remaining[c];
            u.push_back(c);
            descend(depth + 1);
            u.pop_back();
            ++remaining[c];
        }
    }
};

}  // namespace

void for_each_dominated(const Word& w, const Alphabet& alphabet, std::size_t min_len,
                        std::size_t max_len, std::uint64_t cap,
                        const std::function<void(std::span<const Symbol>, std::size_t)>& visit) {
    if (min_len > max_len) return;
    require_budget(words_between(alphabet.size(), min_len, max_len), cap);
    const auto symbols = alphabet.encode(w);
    max_len = std::min(max_len, symbols.size());
    if (min_len > max_len) return;
    DominatedWalk walk{symbols, alphabet.size(), min_len, max_len, visit, {}, {}, {}};
    walk.remaining.assign(alphabet.size(), 0);
    for (Symbol s : symbols) ++walk.remaining[s];
    walk.run();
}

WordSet scatfacts(const Word& w, const Alphabet& alphabet, std::size_t k) {
    const auto symbols = alphabet.encode(w);
    WordSet result(alphabet, k);
    if (k > symbols.size()) return result;

    // next[i][c]: first position >= i holding c, or n.
    const std::size_t n = symbols.size();
    const std::size_t sigma = alphabet.size();
    std::vector<std::size_t> next((n + 1) * sigma, n);
    for (std::size_t i = n; i-- > 0;) {
        std::copy_n(next.begin() + static_cast<std::ptrdiff_t>((i + 1) * sigma), sigma,
                    next.begin() + static_cast<std::ptrdiff_t>(i * sigma));
        next[i * sigma + symbols[i]] = i;
    }

    std::vector<Symbol> u;
    u.reserve(k);
    std::function<void(std::size_t)> grow = [&](std::size_t pos) {
        if (u.size() == k) {
            result.push_sorted(alphabet.decode(u));
            return;
        }
        // Not enough letters left to reach length k.
        if (n - pos < k - u.size()) return;
        for (Symbol c = 0; c < sigma; ++c) {
            std::size_t at = next[pos * sigma + c];
            if (at == n) continue;
            u.push_back(c);
            grow(at + 1);
            u.pop_back();
        }
    };
    grow(0);
    return result;
}

namespace {

template <typename Keep>
WordSet collect_level(const Word& w, const Alphabet& alphabet, std::size_t k, std::uint64_t cap,
                      Keep keep) {
    WordSet result(alphabet, k);
    for_each_dominated(w, alphabet, k, k, cap, [&](std::span<const Symbol> u, std::size_t delta) {
        if (keep(delta)) result.push_sorted(alphabet.decode(u));
    });
    return result;
}

}  // namespace

WordSet jscatfacts(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
                   std::uint64_t cap) {
    alphabet.validate(w);
    require_budget(power_count(alphabet.size(), k), cap);
    if (k == 0) {
        WordSet result(alphabet, 0);
        if (l == 0) result.push_sorted(Word{});
        return result;
    }
    if (l >= k) return WordSet(alphabet, k);
    return collect_level(w, alphabet, k, cap, [l](std::size_t delta) { return delta <= l; });
}

WordSet sjsf(const Word& w, const Alphabet& alphabet, std::size_t k, std::size_t l,
             std::uint64_t cap) {
    alphabet.validate(w);
    require_budget(power_count(alphabet.size(), k), cap);
    if (k == 0) {
        WordSet result(alphabet, 0);
        if (l == 0) result.push_sorted(Word{});
        return result;
    }
    if (l >= k) return WordSet(alphabet, k);
    return collect_level(w, alphabet, k, cap, [l](std::size_t delta) { return delta == l; });
}

Interval jumble_spectrum(const Word& u, const Word& w) {
    const std::size_t delta = jumble_index(u, w);
    if (u.empty()) return {0, 0};
    return {delta, u.size() - 1};
}

std::uint64_t permutation_count(const ParikhVector& p) noexcept {
    // Product of binomials C(c_1 + ... + c_i, c_i).
    std::uint64_t result = 1;
    std::uint64_t placed = 0;
    for (std::size_t c : p.counts()) {
        // An intermediate product that overflows only happens for counts far
        // beyond any usable cap, so it saturates as well.
        std::uint64_t binom = 1;
        for (std::uint64_t i = 1; i <= c; ++i) {
            binom = saturating_mul(binom, placed + i);
            if (binom == kSaturated) return kSaturated;
            binom /= i;
        }
        placed += c;
        result = saturating_mul(result, binom);
    }
    return result;
}

WordSet permutation_class(const Word& w, const Alphabet& alphabet, std::uint64_t cap) {
    require_budget(permutation_count(parikh(w, alphabet)), cap);
    auto symbols = alphabet.encode(w);
    std::sort(symbols.begin(), symbols.end());
    WordSet result(alphabet, symbols.size());
    do {
        result.push_sorted(alphabet.decode(symbols));
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return result;
}

}  // namespace jsf
