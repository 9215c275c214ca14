#include "ordex/resolve.hpp"

#include <charconv>
#include <map>
#include <string_view>
#include <utility>

#include "ordex/io.hpp"

namespace ordex {

namespace {

std::uint64_t parse_natural(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw SpecError(what + " must be a natural number, got \"" + text + "\"");
    }
    return value;
}

std::vector<std::pair<std::string, std::string>> parse_query(const std::string& query) {
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t pos = 0;
    while (pos <= query.size()) {
        std::size_t amp = query.find('&', pos);
        if (amp == std::string::npos) {
            amp = query.size();
        }
        const std::string item = query.substr(pos, amp - pos);
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string::npos) {
                throw SpecError("family parameter \"" + item + "\" is not of the form key=value");
            }
            params.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
        pos = amp + 1;
    }
    return params;
}

FamilyId parse_family(const std::string& payload) {
    std::string name = payload;
    std::string query;
    if (std::size_t mark = payload.find('?'); mark != std::string::npos) {
        name = payload.substr(0, mark);
        query = payload.substr(mark + 1);
    }

    static const std::map<std::string, FamilyTag> kNames = {
        {"eq-count", FamilyTag::EqCount}, {"palindrome", FamilyTag::Palindrome},
        {"zeros", FamilyTag::Zeros},      {"xxry", FamilyTag::Xxry},
        {"coprime", FamilyTag::Coprime},  {"c41", FamilyTag::C41},
        {"c51", FamilyTag::C51},          {"kamae-weiss", FamilyTag::KamaeWeiss}};
    auto it = kNames.find(name);
    if (it == kNames.end()) {
        throw SpecError("unknown family \"" + name +
                        "\" (run the families subcommand for the list)");
    }

    std::optional<std::string> kind;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<std::uint64_t>> values;
    for (const auto& [key, value] : parse_query(query)) {
        if (key == "I") {
            kind = value;
        } else if (key == "seed") {
            seed = parse_natural(value, "seed");
        } else if (key == "values") {
            std::vector<std::uint64_t> list;
            std::size_t pos = 0;
            while (pos <= value.size() && !value.empty()) {
                std::size_t comma = value.find(',', pos);
                if (comma == std::string::npos) {
                    comma = value.size();
                }
                list.push_back(parse_natural(value.substr(pos, comma - pos), "values entry"));
                pos = comma + 1;
                if (pos == value.size() + 1) {
                    break;
                }
            }
            values = std::move(list);
        } else {
            throw SpecError("unknown family parameter \"" + key + "\"");
        }
    }

    std::optional<IndexSet> index_set;
    if (kind) {
        if (*kind == "evens") {
            index_set = IndexSet::evens();
        } else if (*kind == "odds") {
            index_set = IndexSet::odds();
        } else if (*kind == "primes") {
            index_set = IndexSet::primes();
        } else if (*kind == "list") {
            index_set = IndexSet::explicit_list(values.value_or(std::vector<std::uint64_t>{}));
        } else if (*kind == "pseudo") {
            if (!seed) {
                throw SpecError("I=pseudo requires a seed parameter");
            }
            index_set = IndexSet::pseudorandom(*seed);
        } else {
            throw SpecError("unknown index set \"" + *kind +
                            "\" (expected evens, odds, primes, list, or pseudo)");
        }
        if (seed && *kind != "pseudo") {
            throw SpecError("the seed parameter applies only to I=pseudo");
        }
        if (values && *kind != "list") {
            throw SpecError("the values parameter applies only to I=list");
        }
    } else if (seed || values) {
        throw SpecError("seed/values parameters need I=pseudo or I=list");
    }

    FamilyId id{it->second, std::move(index_set)};
    try {
        family_spec_string(id);  // validates the id/index-set pairing
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
    return id;
}

}  // namespace

ResolvedLanguage resolve_spec(const std::string& text, const std::string& default_alphabet,
                              bool auto_complete) {
    constexpr std::string_view kRegex = "regex:";
    constexpr std::string_view kDfa = "dfa:";
    constexpr std::string_view kFamily = "family:";

    if (text.rfind(kRegex, 0) == 0) {
        Alphabet alphabet(default_alphabet);
        Regex regex = parse_regex(text.substr(kRegex.size()), alphabet);
        Dfa minimal = minimize(compile_regex(regex));
        LanguageOracle oracle = oracle_from_dfa(minimal, text);
        return ResolvedLanguage{std::move(oracle), std::move(minimal), std::nullopt, {}};
    }
    if (text.rfind(kDfa, 0) == 0) {
        DfaLoadResult loaded = load_dfa_file(text.substr(kDfa.size()), auto_complete);
        Dfa minimal = minimize(loaded.dfa);
        LanguageOracle oracle = oracle_from_dfa(minimal, text);
        return ResolvedLanguage{std::move(oracle), std::move(minimal), std::nullopt,
                                std::move(loaded.notes)};
    }
    if (text.rfind(kFamily, 0) == 0) {
        FamilyId id = parse_family(text.substr(kFamily.size()));
        return ResolvedLanguage{family_oracle(id), std::nullopt, id, {}};
    }
    throw SpecError("language spec must start with regex:, dfa:, or family: (got \"" + text +
                    "\")");
}

std::string expand_caret(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '^') {
            throw std::invalid_argument("caret shorthand needs a symbol before '^'");
        }
        if (i + 1 < text.size() && text[i + 1] == '^') {
            std::size_t digits = i + 2;
            std::size_t end = digits;
            while (end < text.size() && text[end] >= '0' && text[end] <= '9') {
                ++end;
            }
            if (end == digits) {
                throw std::invalid_argument("caret shorthand needs digits after '^'");
            }
            std::uint64_t count = 0;
            auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + end, count);
            if (ec != std::errc{} || ptr != text.data() + end || count > 1000000) {
                throw std::invalid_argument("caret count out of range (max 1,000,000)");
            }
            out.append(static_cast<std::size_t>(count), c);
            i = end;
        } else {
            out.push_back(c);
            ++i;
        }
    }
    return out;
}

}  // namespace ordex
