#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "jsf/errors.hpp"
#include "jsf/simon.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace jsf;
using namespace jsf::literals;
using Strings = std::vector<std::string>;

namespace {
const Alphabet kAb = Alphabet::from_utf8("ab");
const Alphabet kAbc = Alphabet::from_utf8("abc");
const Alphabet kAbcd = Alphabet::from_utf8("abcd");

std::vector<Strings> as_strings(const std::vector<WordSet>& classes) {
    std::vector<Strings> out;
    for (const auto& c : classes) out.push_back(oracle::to_strings(c));
    return out;
}

/// Partition of Sigma^{<=n} grouped by an arbitrary key, classes sorted by
/// their shortlex-smallest member.
template <typename Key>
std::vector<Strings> brute_partition(const std::string& alpha, std::size_t n, Key key) {
    std::map<decltype(key(std::string{})), Strings> groups;
    for (const auto& w : oracle::all_words_upto(alpha, n)) groups[key(w)].push_back(w);
    std::vector<Strings> out;
    for (auto& [_, members] : groups) out.push_back(members);
    // all_words_upto lists words in shortlex order, so members are sorted.
    std::sort(out.begin(), out.end(), [](const Strings& x, const Strings& y) {
        return x.front().size() != y.front().size() ? x.front().size() < y.front().size() : x.front() < y.front();
    });
    return out;
}
}  // namespace

TEST_CASE("fingerprint layers") {
    const auto fp = fingerprint("aab"_w, kAb, 2, 1);
    CHECK(oracle::to_strings(fp.members) == Strings{"aa", "ab", "ba"});
    CHECK(oracle::to_strings(fp.layer(0)) == Strings{""});
    CHECK(oracle::to_strings(fp.layer(1)) == Strings{"a", "b"});
    CHECK(fingerprint("abcab"_w, kAbc, 3, 0).members == scatfacts("abcab"_w, kAbc, 3));
    CHECK(oracle::to_strings(fingerprint("ab"_w, kAb, 2, 1).members) == Strings{"ab", "ba"});
    CHECK(fp.serialize() == fingerprint("aaab"_w, kAb, 2, 1).serialize());
    CHECK(fp.serialize() != fingerprint("abb"_w, kAb, 2, 1).serialize());
}

TEST_CASE("equivalence examples") {
    CHECK(equiv("cd"_w, "dc"_w, kAbcd, 3, 1));
    CHECK_FALSE(equiv("abcd"_w, "abdc"_w, kAbcd, 3, 1));
    const auto d = distinguisher("abcd"_w, "abdc"_w, kAbcd, 3, 1);
    REQUIRE(d);
    CHECK(*d == "cda"_w);
    CHECK_FALSE(distinguisher("cd"_w, "dc"_w, kAbcd, 3, 1));
    CHECK(equiv("abcab"_w, "abcab"_w, kAbc, 3, 2));
}

TEST_CASE("equivalence is not preserved by a common prefix") {
    REQUIRE(equiv("cd"_w, "dc"_w, kAbcd, 3, 1));
    CHECK_FALSE(equiv("ab"_w + "cd"_w, "ab"_w + "dc"_w, kAbcd, 3, 1));
}

TEST_CASE("classification") {
    const auto ab = classify("ab"_w, kAb, 2, 1, 4);
    CHECK(ab.kind == ClassKind::ParikhClass);
    const auto* parikh_evidence = std::get_if<ParikhClassEvidence>(&ab.evidence);
    REQUIRE(parikh_evidence);
    REQUIRE(parikh_evidence->members);
    CHECK(oracle::to_strings(*parikh_evidence->members) == Strings{"ab", "ba"});

    const auto abcd = classify("abcd"_w, kAbcd, 3, 1, 6);
    CHECK(abcd.kind == ClassKind::Singleton);

    const auto aab = classify("aab"_w, kAb, 2, 1, 5);
    CHECK(aab.kind == ClassKind::Infinite);
    const auto* infinite = std::get_if<InfiniteEvidence>(&aab.evidence);
    REQUIRE(infinite);
    CHECK(infinite->pumped == "aaab"_w);

    const auto short_word = classify("ab"_w, kAb, 3, 0, 3);
    CHECK(short_word.kind == ClassKind::Singleton);
    CHECK(std::get<SingletonEvidence>(short_word.evidence).short_word);

    CHECK_THROWS_AS(classify("abcd"_w, kAbcd, 3, 1, 3), InvalidArgument);
}

TEST_CASE("classification reports exhausted budgets") {
    const auto verdict = classify("abcd"_w, kAbcd, 3, 1, 9, 1000);
    CHECK(verdict.kind == ClassKind::Unknown);
    const auto* unknown = std::get_if<UnknownEvidence>(&verdict.evidence);
    REQUIRE(unknown);
    CHECK(unknown->exhausted_cap == std::optional<std::uint64_t>(1000));
}

TEST_CASE("classification singletons agree with a bounded search") {
    // Every Singleton verdict from the bounded search is a class with no
    // other member up to the bound, checked against brute-force fingerprints.
    for (const auto& w : oracle::all_words_upto("ab", 4)) {
        for (std::size_t k = 1; k <= 3; ++k) {
            for (std::size_t l = 0; l < k; ++l) {
                const auto verdict = classify(Word::from_utf8(w), kAb, k, l, w.size() + 2);
                const auto key = oracle::jumbled_upto(w, "ab", k, l);
                std::size_t members = 0;
                for (const auto& v : oracle::all_words_upto("ab", w.size() + 2)) {
                    if (oracle::jumbled_upto(v, "ab", k, l) == key) ++members;
                }
                INFO(w, " k=", k, " l=", l);
                if (verdict.kind == ClassKind::Singleton) CHECK(members == 1);
                if (verdict.kind == ClassKind::Unknown) CHECK(members > 1);
            }
        }
    }
}

TEST_CASE("pumping") {
    const auto aab = pump("aab"_w, kAb, 2, 1);
    REQUIRE(aab);
    CHECK(*aab == "aaab"_w);
    CHECK_FALSE(pump("cbaaacbaaa"_w, kAbc, 6, 1));
    CHECK_FALSE(pump("abcd"_w, kAbcd, 3, 1));
}

TEST_CASE("common extension") {
    CHECK(common_extension("aaab"_w, "aaaab"_w, kAb, 2, 1) == "aaaaab"_w);
    CHECK_THROWS_AS(common_extension("ab"_w, "ba"_w, kAb, 2, 1), HypothesisNotMet);
    CHECK_THROWS_AS(common_extension("aab"_w, "abb"_w, kAb, 2, 1), HypothesisNotMet);
}

TEST_CASE("parikh criterion") {
    CHECK(parikh_equiv_check("ab"_w, "ba"_w, kAb, 2));
    CHECK_FALSE(parikh_equiv_check("aab"_w, "abb"_w, kAb, 3));
    CHECK(parikh_equiv_check("abc"_w, "cba"_w, kAbc, 2));
    CHECK(equiv("abc"_w, "cba"_w, kAbc, 2, 1));
    CHECK_THROWS_AS(parikh_equiv_check("aa"_w, "aa"_w, kAb, 2), HypothesisNotMet);
    CHECK_THROWS_AS(parikh_equiv_check("a"_w, "a"_w, kAb, 1), HypothesisNotMet);
}

TEST_CASE("letter extension threshold") {
    auto t = letter_extension_threshold("a"_w, U'a', kAb, 0);
    CHECK(t.p == 1);
    CHECK(t.s == std::optional<Word>("a"_w));
    t = letter_extension_threshold("ab"_w, U'b', kAb, 1);
    CHECK(t.p == 1);
    CHECK(t.s == std::optional<Word>("b"_w));
    t = letter_extension_threshold("a"_w, U'b', kAb, 0);
    CHECK(t.p == 0);
    CHECK(t.s == std::optional<Word>(Word{}));
}

TEST_CASE("letter extension threshold always finds a separating word") {
    for (const auto& u : oracle::all_words_upto("ab", 5)) {
        for (char a : std::string("ab")) {
            for (std::size_t l = 0; l <= u.size(); ++l) {
                INFO(u, " ", a, " l=", l);
                const auto t = letter_extension_threshold(Word::from_utf8(u), static_cast<Letter>(a), kAb, l);
                CHECK(t.s.has_value());
            }
        }
    }
}

TEST_CASE("partitions") {
    CHECK(as_strings(partition(kAb, 2, 2, 1)) ==
          std::vector<Strings>{{""}, {"a"}, {"b"}, {"aa"}, {"ab", "ba"}, {"bb"}});
    for (const auto& c : partition(kAbc, 2, 3, 0)) CHECK(c.size() == 1);
    // With one jumble allowed the words shorter than k no longer separate.
    CHECK(as_strings(partition(kAb, 2, 3, 1)) ==
          std::vector<Strings>{{""}, {"a"}, {"b"}, {"aa"}, {"ab", "ba"}, {"bb"}});
    CHECK(as_strings(partition(kAb, 3, 2, 0)) ==
          brute_partition("ab", 3, [](const std::string& w) { return oracle::simon_key(w, 2); }));
    CHECK(as_strings(partition(kAb, 4, 3, 1)) ==
          brute_partition("ab", 4, [](const std::string& w) { return oracle::jumbled_upto(w, "ab", 3, 1); }));
    CHECK(as_strings(partition(kAbc, 3, 2, 1)) ==
          brute_partition("abc", 3, [](const std::string& w) { return oracle::jumbled_upto(w, "abc", 2, 1); }));
}

namespace {
void check_report(const props::Report& r) {
    INFO(r.failure.value_or(""));
    CHECK(r.ok());
    CHECK(r.cases > 0);
}
}  // namespace

TEST_CASE("equivalence agrees with brute force") {
    check_report(props::equivalence_against_oracle({2, 5}, 3));
    check_report(props::equivalence_against_oracle({3, 3}, 3));
}
TEST_CASE("downward monotonicity") { check_report(props::downward_monotonicity({2, 6}, 4)); }
TEST_CASE("length-k layer decides the fingerprint") { check_report(props::length_k_sufficiency({2, 6}, 4)); }
TEST_CASE("Parikh criterion agrees with equivalence") { check_report(props::parikh_criterion(3, 5, 3)); }
TEST_CASE("pumping is sound") { check_report(props::pumping_soundness({3, 5}, 3, 3)); }
TEST_CASE("same alphabet, different small counts") { check_report(props::same_alphabet_obstruction({3, 4}, 4)); }
TEST_CASE("equivalence axioms") { check_report(props::equivalence_axioms(3000, 5)); }
