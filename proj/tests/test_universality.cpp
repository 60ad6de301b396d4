#include <doctest.h>

#include <string>
#include <vector>

#include "jsf/errors.hpp"
#include "jsf/universality.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace jsf;
using namespace jsf::literals;
using Strings = std::vector<std::string>;

namespace {
const Alphabet kAb = Alphabet::from_utf8("ab");
const Alphabet kAbc = Alphabet::from_utf8("abc");
const Alphabet kAbcd = Alphabet::from_utf8("abcd");
}  // namespace

TEST_CASE("valid range of k") {
    CHECK(valid_k_range("aabbcc"_w, kAbc) == Interval{1, 2});
    CHECK(valid_k_range("abcd"_w, kAbcd) == Interval{1, 1});
    CHECK(valid_k_range("aabb"_w, kAbc) == Interval{0, 0});
}

TEST_CASE("jumble universality") {
    CHECK(is_jumble_universal("aabbcc"_w, kAbc, 2, 1));
    CHECK_FALSE(is_jumble_universal("aabbcc"_w, kAbc, 2, 0));
    CHECK(is_jumble_universal("aaabbb"_w, kAb, 3, 1));
    CHECK(is_jumble_universal("abcabc"_w, kAbc, 2, 0));
    CHECK_FALSE(is_jumble_universal("aabbcc"_w, kAbc, 3, 2));
}

TEST_CASE("minimal number of jumbles") {
    CHECK(min_jumbles("aabbcc"_w, kAbc, 2) == 1);
    CHECK(min_jumbles("aaabbb"_w, kAb, 3) == 1);
    CHECK(min_jumbles("abcabc"_w, kAbc, 2) == 0);
    CHECK_THROWS_AS(min_jumbles("aabbcc"_w, kAbc, 3), NoSolution);
    CHECK_THROWS_AS(min_jumbles("aabb"_w, kAbc, 1), NoSolution);
}

TEST_CASE("universality report") {
    const auto r = universality_report("aabbcc"_w, kAbc, 2);
    CHECK(r.k == 2);
    CHECK(r.min_jumbles == 1);
    CHECK(r.valid_k_range == Interval{1, 2});
    CHECK(r.missing_at == std::vector<std::uint64_t>{3, 0});
}

TEST_CASE("missing words") {
    CHECK(oracle::to_strings(missing_words("aabbcc"_w, kAbc, 2, 0)) == Strings{"ba", "ca", "cb"});
    CHECK(missing_words("aabbcc"_w, kAbc, 2, 1).empty());
    CHECK(missing_words("abcd"_w, kAbcd, 3, 1).size() == 44);
}

TEST_CASE("relocating one letter") {
    const auto wx = construct_wx("aabcbcbc"_w, kAbc, U'a');
    CHECK(wx == "abcabcbc"_w);
    CHECK(jumble_index(wx, "aabcbcbc"_w) == 1);
    CHECK(oracle::delta("abcabcbc", "aabcbcbc") == std::optional<std::size_t>(1));
    // r(w) = "bc" for w = aabc.bcbc
    CHECK_THROWS_AS(construct_wx("aabcbcbc"_w, kAbc, U'b'), HypothesisNotMet);
    CHECK_THROWS_AS(construct_wx("aabcbcbc"_w, kAbc, U'd'), Error);
    CHECK_THROWS_AS(construct_wx("aabb"_w, kAbc, U'a'), HypothesisNotMet);
}

TEST_CASE("one-jumble closed form") {
    CHECK(oracle::to_strings(one_jumble_set("aababb"_w, kAb)) == Strings{"baa", "bba"});
    CHECK(oracle::sjsf("aababb", "ab", 3, 1) == Strings{"baa", "bba"});
    CHECK(one_jumble_set("aababb"_w, kAb) == sjsf("aababb"_w, kAb, 3, 1));
    // Empty rest: the complement of its alphabet is everything.
    const auto w = "aabbba"_w;
    REQUIRE(arch_factorization(w, kAb).rest.empty());
    CHECK(one_jumble_set(w, kAb) == sjsf(w, kAb, 3, 1));
    CHECK_THROWS_AS(one_jumble_set("abab"_w, kAbc), HypothesisNotMet);
    CHECK_THROWS_AS(one_jumble_set("abb"_w, kAb), HypothesisNotMet);
}

TEST_CASE("walkthrough rearrangement is 4-universal") {
    std::string a = "aaabcdabbbcdcddcd";
    std::string b = "abcdabcdbacdbadcd";
    CHECK(universality_index(Word::from_utf8(b), kAbcd) == 4);
    CHECK(universality_index(Word::from_utf8(a), kAbcd) < 4);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

namespace {
void check_report(const props::Report& r) {
    INFO(r.failure.value_or(""));
    CHECK(r.ok());
    CHECK(r.cases > 0);
}
}  // namespace

TEST_CASE("upper bound, strict progress and growth") { check_report(props::coverage_bound_progress_growth({3, 7})); }
TEST_CASE("potential additivity") { check_report(props::potential_additivity(5000, 3)); }
TEST_CASE("one-jumble set and relocation coverage") { check_report(props::one_jumble_and_relocation(200, 12, 3)); }
