#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "jsf/word.hpp"

namespace jsf::cli {

enum class OutputMode { Plain, Structured };

enum ExitStatus : int {
    kSuccess = 0,
    kPredicateFalse = 1,
    kUsageError = 2,
    kBudgetExceeded = 3,
};

struct CliRequest {
    std::string subcommand;
    /// Raw UTF-8 words: positionals first, then the lines of --words-from.
    std::vector<std::string> words;
    std::optional<std::string> alphabet;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> l;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> bound;
    std::optional<std::uint64_t> cap;
    OutputMode output_mode = OutputMode::Plain;
};

struct ParsedWords {
    std::vector<Word> words;
    Alphabet alphabet;
};

/// Thrown for malformed invocations; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes the words and fixes the alphabet: the explicit letters (sorted,
/// deduplicated) when given, otherwise the sorted union of the words' letters.
ParsedWords parse_words(const std::vector<std::string>& raw, const std::optional<std::string>& alphabet_flag);

/// Word-list file: one word per line, empty line = empty word, '#' lines ignored.
std::vector<std::string> read_word_list(const std::string& path);

/// Parses argv (without the program name). Throws UsageError.
CliRequest parse_request(const std::vector<std::string>& args);

struct Response {
    int status = kSuccess;
    std::string subcommand;
    nlohmann::json inputs;
    std::string alphabet;
    nlohmann::json result;
    nlohmann::json evidence;
    /// Human-readable form of the result.
    std::string plain;
};

/// Runs one subcommand. Library errors propagate as exceptions.
Response dispatch(const CliRequest& request);

std::string render(const Response& response, OutputMode mode);

/// Registered subcommand names, in help order.
const std::vector<std::string>& subcommand_names();

/// Full front-end: parse, dispatch, render, map errors to exit statuses.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jsf::cli
