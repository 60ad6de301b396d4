#include "jsf/word.hpp"

#include <algorithm>

#include "jsf/errors.hpp"

namespace jsf {

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        auto lead = static_cast<unsigned char>(text[i]);
        std::size_t extra = 0;
        char32_t cp = 0;
        if (lead < 0x80) {
            cp = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1;
            cp = lead & 0x1F;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2;
            cp = lead & 0x0F;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3;
            cp = lead & 0x07;
        } else {
            throw InvalidArgument("malformed UTF-8: invalid lead byte at offset " + std::to_string(i));
        }
        if (i + extra >= text.size()) {
            throw InvalidArgument("malformed UTF-8: truncated sequence at offset " + std::to_string(i));
        }
        for (std::size_t j = 1; j <= extra; ++j) {
            auto cont = static_cast<unsigned char>(text[i + j]);
            if ((cont & 0xC0) != 0x80) {
                throw InvalidArgument("malformed UTF-8: bad continuation byte at offset " +
                                      std::to_string(i + j));
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        static constexpr char32_t min_for_length[] = {0, 0x80, 0x800, 0x10000};
        if (cp < min_for_length[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw InvalidArgument("malformed UTF-8: invalid codepoint at offset " + std::to_string(i));
        }
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

Alphabet::Alphabet(std::u32string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw InvalidArgument("alphabet must contain at least one letter");
    }
    index_.reserve(symbols_.size());
    for (Symbol i = 0; i < symbols_.size(); ++i) {
        if (!index_.emplace(symbols_[i], i).second) {
            throw InvalidArgument("alphabet letter '" + encode_utf8(std::u32string(1, symbols_[i])) +
                                  "' occurs twice");
        }
    }
}

Alphabet Alphabet::infer(std::span<const Word> words) {
    std::u32string all;
    for (const auto& w : words) all += w.letters();
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.empty()) {
        throw InvalidArgument("cannot infer an alphabet from empty words only");
    }
    return Alphabet(std::move(all));
}

std::optional<Symbol> Alphabet::index_of(Letter a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Symbol> Alphabet::encode(const Word& w) const {
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Letter a : w) {
        auto idx = index_of(a);
        if (!idx) {
            throw AlphabetViolation("letter '" + encode_utf8(std::u32string(1, a)) + "' of word '" +
                                    w.to_utf8() + "' is not in the alphabet {" + to_utf8() + "}");
        }
        out.push_back(*idx);
    }
    return out;
}

Word Alphabet::decode(std::span<const Symbol> symbols) const {
    std::u32string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) out.push_back(symbols_.at(s));
    return Word(std::move(out));
}

void Alphabet::validate(const Word& w) const { (void)encode(w); }

bool ShortlexLess::operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v[i]) continue;
        auto a = alphabet_->index_of(u[i]);
        auto b = alphabet_->index_of(v[i]);
        if (!a || !b) {
            throw AlphabetViolation("cannot order words with letters outside the alphabet");
        }
        return *a < *b;
    }
    return false;
}

}  // namespace jsf
