#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jsf/core.hpp"
#include "jsf/enumerate.hpp"
#include "jsf/errors.hpp"
#include "jsf/simon.hpp"
#include "jsf/universality.hpp"

namespace jsf::cli {

using nlohmann::json;

namespace {

json word_json(const Word& w) { return w.to_utf8(); }

json set_json(const WordSet& set) {
    json out = json::array();
    for (const auto& u : set) out.push_back(u.to_utf8());
    return out;
}

json interval_json(const Interval& iv) { return {{"lo", iv.lo}, {"hi", iv.hi}}; }

std::string interval_plain(const Interval& iv) { return std::to_string(iv.lo) + ".." + std::to_string(iv.hi); }

std::string set_plain(const WordSet& set) {
    std::string out;
    for (const auto& u : set) out += u.to_utf8() + '\n';
    return out;
}

std::string join_words(const WordSet& set, const std::string& empty_word) {
    std::string out;
    for (const auto& u : set) {
        if (!out.empty()) out += ' ';
        out += u.empty() ? empty_word : u.to_utf8();
    }
    return out;
}

std::string bool_plain(bool value) { return value ? "true\n" : "false\n"; }

/// Everything a handler needs, with the words already decoded.
struct Context {
    const CliRequest& request;
    ParsedWords parsed;
    std::uint64_t cap;

    const Word& word(std::size_t i) const { return parsed.words[i]; }
    const Alphabet& alphabet() const { return parsed.alphabet; }

    std::size_t k() const { return required(request.k, "--k"); }
    std::size_t l() const { return required(request.l, "--l"); }
    std::size_t n() const { return required(request.n, "--n"); }

    Letter letter(std::size_t i) const {
        if (word(i).size() != 1) {
            throw UsageError(request.subcommand + ": argument " + std::to_string(i + 1) +
                             " must be a single letter");
        }
        return word(i)[0];
    }

    static std::size_t required(const std::optional<std::uint64_t>& value, const char* flag) {
        if (!value) throw UsageError(std::string("missing required option ") + flag);
        return static_cast<std::size_t>(*value);
    }
};

struct Command {
    /// Number of word arguments; -1 means the command takes none and needs --alphabet.
    int arity;
    std::function<void(const Context&, Response&)> handler;
};

void set_predicate(Response& r, bool value) {
    r.result = value;
    r.plain = bool_plain(value);
    r.status = value ? kSuccess : kPredicateFalse;
}

void set_set(Response& r, const WordSet& set) {
    r.result = set_json(set);
    r.plain = set_plain(set);
}

void set_scalar(Response& r, std::size_t value) {
    r.result = value;
    r.plain = std::to_string(value) + '\n';
}

void set_interval(Response& r, const Interval& iv) {
    r.result = interval_json(iv);
    r.plain = interval_plain(iv) + '\n';
}

json verdict_evidence(const ClassVerdict& verdict) {
    return std::visit(
        [](const auto& e) -> json {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, SingletonEvidence>) {
                json out = {{"short_word_certificate", e.short_word}};
                out["search_bound"] = e.search_bound ? json(*e.search_bound) : json(nullptr);
                return out;
            } else if constexpr (std::is_same_v<T, ParikhClassEvidence>) {
                json out = {{"max_count", e.max_count}, {"k", e.k}, {"l", e.l}};
                out["members"] = e.members ? set_json(*e.members) : json(nullptr);
                return out;
            } else if constexpr (std::is_same_v<T, InfiniteEvidence>) {
                return {{"pumped", word_json(e.pumped)}};
            } else {
                json out = {{"search_bound", e.search_bound}};
                out["exhausted_cap"] = e.exhausted_cap ? json(*e.exhausted_cap) : json(nullptr);
                json others = json::array();
                for (const auto& v : e.other_members) others.push_back(word_json(v));
                out["other_members"] = std::move(others);
                return out;
            }
        },
        verdict.evidence);
}

std::string verdict_plain(const ClassVerdict& verdict) {
    std::string out = std::string(to_string(verdict.kind)) + '\n';
    std::visit(
        [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, SingletonEvidence>) {
                if (e.search_bound) out += "no other member up to length " + std::to_string(*e.search_bound) + '\n';
                if (e.short_word) out += "certified: |w| < k with l = 0\n";
            } else if constexpr (std::is_same_v<T, ParikhClassEvidence>) {
                if (e.members) out += "class: " + join_words(*e.members, "ε") + '\n';
            } else if constexpr (std::is_same_v<T, InfiniteEvidence>) {
                out += "pumped: " + e.pumped.to_utf8() + '\n';
            } else {
                if (e.exhausted_cap) out += "budget exhausted at cap " + std::to_string(*e.exhausted_cap) + '\n';
                for (const auto& v : e.other_members) out += "also equivalent: " + v.to_utf8() + '\n';
            }
        },
        verdict.evidence);
    return out;
}

const std::map<std::string, Command>& commands() {
    static const std::map<std::string, Command> table = {
        {"parikh",
         {1,
          [](const Context& c, Response& r) {
              const auto p = parikh(c.word(0), c.alphabet());
              r.result = p.counts();
              std::string text;
              for (std::size_t i = 0; i < p.size(); ++i) text += (i ? " " : "") + std::to_string(p[i]);
              r.plain = text + '\n';
          }}},
        {"compare",
         {2,
          [](const Context& c, Response& r) {
              const auto order = compare_parikh(parikh(c.word(0), c.alphabet()), parikh(c.word(1), c.alphabet()));
              r.result = to_string(order);
              r.plain = std::string(to_string(order)) + '\n';
          }}},
        {"subseq", {2, [](const Context& c, Response& r) { set_predicate(r, is_scattered_factor(c.word(0), c.word(1))); }}},
        {"lcsf",
         {2,
          [](const Context& c, Response& r) {
              const auto res = lcsf(c.word(0), c.word(1));
              r.result = {{"length", res.length}, {"witness", word_json(res.witness)}};
              r.plain = std::to_string(res.length) + '\n' + res.witness.to_utf8() + '\n';
          }}},
        {"jumbled", {2, [](const Context& c, Response& r) { set_predicate(r, is_jumbled_scatfact(c.word(0), c.word(1))); }}},
        {"delta",
         {2,
          [](const Context& c, Response& r) {
              set_scalar(r, jumble_index(c.word(0), c.word(1)));
              const auto common = lcsf(c.word(0), c.word(1));
              r.evidence = {{"lcsf", common.length}, {"witness", word_json(common.witness)}};
          }}},
        {"spectrum", {2, [](const Context& c, Response& r) { set_interval(r, jumble_spectrum(c.word(0), c.word(1))); }}},
        {"check",
         {2,
          [](const Context& c, Response& r) { set_predicate(r, is_l_jumbled(c.word(0), c.word(1), c.l())); }}},
        {"scatfacts", {1, [](const Context& c, Response& r) { set_set(r, scatfacts(c.word(0), c.alphabet(), c.k())); }}},
        {"jsf",
         {1, [](const Context& c, Response& r) { set_set(r, jscatfacts(c.word(0), c.alphabet(), c.k(), c.l(), c.cap)); }}},
        {"sjsf", {1, [](const Context& c, Response& r) { set_set(r, sjsf(c.word(0), c.alphabet(), c.k(), c.l(), c.cap)); }}},
        {"perms", {1, [](const Context& c, Response& r) { set_set(r, permutation_class(c.word(0), c.alphabet(), c.cap)); }}},
        {"arch",
         {1,
          [](const Context& c, Response& r) {
              const auto f = arch_factorization(c.word(0), c.alphabet());
              json arches = json::array();
              std::string dotted;
              for (const auto& a : f.arches) {
                  arches.push_back(word_json(a));
                  dotted += a.to_utf8() + '.';
              }
              r.result = {{"arches", arches}, {"rest", word_json(f.rest)}, {"model", word_json(f.model)}};
              r.plain = dotted + f.rest.to_utf8() + '\n' + "model: " + f.model.to_utf8() + '\n';
          }}},
        {"iota", {1, [](const Context& c, Response& r) { set_scalar(r, universality_index(c.word(0), c.alphabet())); }}},
        {"potential", {1, [](const Context& c, Response& r) { set_scalar(r, potential(c.word(0), c.alphabet())); }}},
        {"fingerprint",
         {1,
          [](const Context& c, Response& r) {
              const auto fp = fingerprint(c.word(0), c.alphabet(), c.k(), c.l(), c.cap);
              set_set(r, fp.members);
              json layers = json::array();
              for (const auto& layer : fp.shorter) layers.push_back(set_json(layer));
              r.evidence = {{"shorter_layers", layers}};
          }}},
        {"equiv",
         {2,
          [](const Context& c, Response& r) {
              const auto d = distinguisher(c.word(0), c.word(1), c.alphabet(), c.k(), c.l(), c.cap);
              set_predicate(r, !d.has_value());
              r.evidence = {{"distinguisher", d ? word_json(*d) : json(nullptr)}};
              if (d) r.plain += "distinguisher: " + d->to_utf8() + '\n';
          }}},
        {"classify",
         {1,
          [](const Context& c, Response& r) {
              const std::size_t bound =
                  c.request.bound ? static_cast<std::size_t>(*c.request.bound) : c.word(0).size() + 2;
              const auto verdict = classify(c.word(0), c.alphabet(), c.k(), c.l(), bound, c.cap);
              r.result = to_string(verdict.kind);
              r.evidence = verdict_evidence(verdict);
              r.plain = verdict_plain(verdict);
          }}},
        {"pump",
         {1,
          [](const Context& c, Response& r) {
              const auto pumped = pump(c.word(0), c.alphabet(), c.k(), c.l());
              r.result = pumped ? word_json(*pumped) : json(nullptr);
              r.plain = pumped ? pumped->to_utf8() + '\n' : "";
              r.status = pumped ? kSuccess : kPredicateFalse;
          }}},
        {"extend",
         {2,
          [](const Context& c, Response& r) {
              const auto v = common_extension(c.word(0), c.word(1), c.alphabet(), c.k(), c.l(), c.cap);
              r.result = word_json(v);
              r.plain = v.to_utf8() + '\n';
          }}},
        {"parikh-equiv",
         {2,
          [](const Context& c, Response& r) {
              set_predicate(r, parikh_equiv_check(c.word(0), c.word(1), c.alphabet(), c.k()));
          }}},
        {"threshold",
         {2,
          [](const Context& c, Response& r) {
              const auto t = letter_extension_threshold(c.word(0), c.letter(1), c.alphabet(), c.l(), c.cap);
              r.result = {{"p", t.p}, {"s", t.s ? word_json(*t.s) : json(nullptr)}};
              r.plain = "p: " + std::to_string(t.p) + '\n' + "s: " + (t.s ? t.s->to_utf8() : "none") + '\n';
          }}},
        {"partition",
         {-1,
          [](const Context& c, Response& r) {
              const auto classes = partition(c.alphabet(), c.n(), c.k(), c.l(), c.cap);
              r.result = json::array();
              for (const auto& cls : classes) {
                  r.result.push_back(set_json(cls));
                  r.plain += join_words(cls, "ε") + '\n';
              }
          }}},
        {"k-range", {1, [](const Context& c, Response& r) { set_interval(r, valid_k_range(c.word(0), c.alphabet())); }}},
        {"universal",
         {1,
          [](const Context& c, Response& r) {
              set_predicate(r, is_jumble_universal(c.word(0), c.alphabet(), c.k(), c.l(), c.cap));
          }}},
        {"min-jumbles",
         {1,
          [](const Context& c, Response& r) {
              const auto report = universality_report(c.word(0), c.alphabet(), c.k(), c.cap);
              set_scalar(r, report.min_jumbles);
              r.evidence = {{"valid_k_range", interval_json(report.valid_k_range)},
                            {"upper_bound", report.k - report.valid_k_range.lo},
                            {"missing_at", report.missing_at}};
          }}},
        {"missing",
         {1, [](const Context& c, Response& r) { set_set(r, missing_words(c.word(0), c.alphabet(), c.k(), c.l(), c.cap)); }}},
        {"wx",
         {2,
          [](const Context& c, Response& r) {
              const auto wx = construct_wx(c.word(0), c.alphabet(), c.letter(1));
              r.result = word_json(wx);
              r.plain = wx.to_utf8() + '\n';
          }}},
        {"one-jumble", {1, [](const Context& c, Response& r) { set_set(r, one_jumble_set(c.word(0), c.alphabet())); }}},
    };
    return table;
}

std::optional<std::uint64_t> parse_count(const std::optional<std::string>& text, const char* flag) {
    if (!text) return std::nullopt;
    const std::string& s = *text;
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw UsageError(std::string(flag) + " expects a non-negative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw UsageError(std::string(flag) + " value '" + s + "' is out of range");
    }
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, command] : commands()) out.push_back(name);
        return out;
    }();
    return names;
}

ParsedWords parse_words(const std::vector<std::string>& raw, const std::optional<std::string>& alphabet_flag) {
    std::vector<Word> words;
    words.reserve(raw.size());
    for (const auto& text : raw) {
        try {
            words.push_back(Word::from_utf8(text));
        } catch (const InvalidArgument& e) {
            throw UsageError("word '" + text + "': " + e.what());
        }
    }
    std::optional<Alphabet> alphabet;
    try {
        if (alphabet_flag) {
            auto letters = decode_utf8(*alphabet_flag);
            std::sort(letters.begin(), letters.end());
            letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
            alphabet.emplace(std::move(letters));
        } else {
            alphabet.emplace(Alphabet::infer(words));
        }
    } catch (const InvalidArgument& e) {
        throw UsageError(std::string("alphabet: ") + e.what() + (alphabet_flag ? "" : "; pass --alphabet"));
    }
    for (const auto& w : words) {
        try {
            alphabet->validate(w);
        } catch (const AlphabetViolation& e) {
            throw UsageError(e.what());
        }
    }
    return {std::move(words), std::move(*alphabet)};
}

std::vector<std::string> read_word_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open word list '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();

    std::vector<std::string> words;
    std::size_t start = 0;
    while (start < content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos) end = content.size();
        std::string line = content.substr(start, end - start);
        if (line.empty() || line[0] != '#') words.push_back(std::move(line));
        start = end + 1;
    }
    return words;
}

CliRequest parse_request(const std::vector<std::string>& args) {
    CLI::App app{"Jumbled scattered factor toolkit"};
    std::string subcommand;
    std::vector<std::string> words;
    std::optional<std::string> alphabet, k, l, n, bound, cap, words_from;
    bool structured = false;

    app.add_option("subcommand", subcommand, "one of: " + [] {
        std::string all;
        for (const auto& name : subcommand_names()) all += (all.empty() ? "" : ", ") + name;
        return all;
    }())->required();
    app.add_option("words", words, "input words (an empty argument is the empty word)");
    app.add_option("--alphabet", alphabet, "alphabet letters; default: letters of the input words");
    app.add_option("--k", k, "scattered factor length");
    app.add_option("--l", l, "number of jumbles");
    app.add_option("--n", n, "maximal word length for partition");
    app.add_option("--bound", bound, "search bound for classify (default |w| + 2)");
    app.add_option("--cap", cap, "enumeration cap (default 10000000)");
    app.add_option("--words-from", words_from, "read additional words from a file, one per line");
    app.add_flag("--json", structured, "emit one JSON document");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliRequest request;
    request.subcommand = subcommand;
    if (!commands().contains(subcommand)) throw UsageError("unknown subcommand '" + subcommand + "'");
    request.words = std::move(words);
    if (words_from) {
        auto extra = read_word_list(*words_from);
        request.words.insert(request.words.end(), extra.begin(), extra.end());
    }
    request.alphabet = alphabet;
    request.k = parse_count(k, "--k");
    request.l = parse_count(l, "--l");
    request.n = parse_count(n, "--n");
    request.bound = parse_count(bound, "--bound");
    request.cap = parse_count(cap, "--cap");
    request.output_mode = structured ? OutputMode::Structured : OutputMode::Plain;
    return request;
}

Response dispatch(const CliRequest& request) {
    const auto it = commands().find(request.subcommand);
    if (it == commands().end()) throw UsageError("unknown subcommand '" + request.subcommand + "'");
    const Command& command = it->second;

    if (command.arity < 0) {
        if (!request.words.empty()) throw UsageError(request.subcommand + " takes no words");
        if (!request.alphabet) throw UsageError(request.subcommand + " requires --alphabet");
    } else if (request.words.size() != static_cast<std::size_t>(command.arity)) {
        throw UsageError(request.subcommand + " expects " + std::to_string(command.arity) + " word(s), got " +
                         std::to_string(request.words.size()));
    }

    Context context{request, parse_words(request.words, request.alphabet), request.cap.value_or(kDefaultCap)};

    Response response;
    response.subcommand = request.subcommand;
    response.alphabet = context.alphabet().to_utf8();
    response.inputs = {{"words", request.words}};
    if (request.k) response.inputs["k"] = *request.k;
    if (request.l) response.inputs["l"] = *request.l;
    if (request.n) response.inputs["n"] = *request.n;
    if (request.bound) response.inputs["bound"] = *request.bound;
    if (request.cap) response.inputs["cap"] = *request.cap;
    command.handler(context, response);
    return response;
}

std::string render(const Response& response, OutputMode mode) {
    if (mode == OutputMode::Plain) return response.plain;
    json doc = {{"subcommand", response.subcommand},
                {"inputs", response.inputs},
                {"alphabet", response.alphabet},
                {"result", response.result},
                {"evidence", response.evidence},
                {"status", response.status}};
    return doc.dump(2) + '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto request = parse_request(args);
        const auto response = dispatch(request);
        out << render(response, request.output_mode);
        return response.status;
    } catch (const CLI::CallForHelp&) {
        out << "usage: jsf <subcommand> [words...] [--alphabet L] [--k N] [--l N] [--n N] [--bound N] "
               "[--cap N] [--words-from PATH] [--json]\n";
        return kSuccess;
    } catch (const BudgetExceeded& e) {
        err << "jsf: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const UsageError& e) {
        err << "jsf: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "jsf: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace jsf::cli
