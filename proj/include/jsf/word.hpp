#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jsf {

/// A single letter: one Unicode codepoint.
using Letter = char32_t;

/// Position of a letter inside its alphabet (0-based).
using Symbol = std::uint32_t;

std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

/// A finite sequence of letters. The empty word is the default value.
class Word {
public:
    Word() = default;
    explicit Word(std::u32string letters) : letters_(std::move(letters)) {}

    static Word from_utf8(std::string_view text) { return Word(decode_utf8(text)); }
    std::string to_utf8() const { return encode_utf8(letters_); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    const std::u32string& letters() const noexcept { return letters_; }

    Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
    Word substr(std::size_t pos, std::size_t n = std::u32string::npos) const {
        return Word(letters_.substr(pos, n));
    }

    Word& operator+=(const Word& other) {
        letters_ += other.letters_;
        return *this;
    }
    Word& operator+=(Letter a) {
        letters_.push_back(a);
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
    friend Word operator+(Word lhs, Letter a) { return lhs += a; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::u32string letters_;
};

/// Ordered finite set of letters a_1 < ... < a_sigma.
class Alphabet {
public:
    /// Letters in index order; must be non-empty and pairwise distinct.
    explicit Alphabet(std::u32string symbols);

    static Alphabet from_utf8(std::string_view letters) { return Alphabet(decode_utf8(letters)); }

    /// Sorted (by codepoint), deduplicated union of the letters of all words.
    static Alphabet infer(std::span<const Word> words);

    std::size_t size() const noexcept { return symbols_.size(); }
    Letter letter(Symbol i) const { return symbols_[i]; }
    const std::u32string& letters() const noexcept { return symbols_; }

    std::optional<Symbol> index_of(Letter a) const;
    bool contains(Letter a) const { return index_of(a).has_value(); }

    /// Symbol indices of w; throws AlphabetViolation for a foreign letter.
    std::vector<Symbol> encode(const Word& w) const;
    Word decode(std::span<const Symbol> symbols) const;

    /// Throws AlphabetViolation unless every letter of w is in this alphabet.
    void validate(const Word& w) const;

    std::string to_utf8() const { return encode_utf8(symbols_); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    std::u32string symbols_;
    std::unordered_map<Letter, Symbol> index_;
};

/// Shortlex order induced by an alphabet: shorter words first, then
/// lexicographic by letter index. On words of one length this is the
/// plain lexicographic order.
class ShortlexLess {
public:
    explicit ShortlexLess(const Alphabet& alphabet) : alphabet_(&alphabet) {}
    bool operator()(const Word& u, const Word& v) const;

private:
    const Alphabet* alphabet_;
};

namespace literals {
inline Word operator""_w(const char* text, std::size_t n) {
    return Word::from_utf8(std::string_view(text, n));
}
}  // namespace literals

}  // namespace jsf
