#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordex/dfa.hpp"
#include "ordex/engine.hpp"
#include "ordex/families.hpp"
#include "ordex/harness.hpp"
#include "ordex/io.hpp"
#include "ordex/oracle.hpp"
#include "ordex/regex.hpp"
#include "ordex/resolve.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ordex;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

/// Thrown for argument combinations CLI11 cannot express (e.g. a flag that is
/// mandatory only for some language schemes). Mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LangArgs {
    std::string spec;
    std::string alphabet = "01";
    bool auto_complete = false;
};

void add_lang_options(CLI::App* cmd, LangArgs& args) {
    cmd->add_option("--lang", args.spec,
                    "language spec: regex:<pattern>, dfa:<path>, or family:<name>[?k=v&...]")
        ->required();
    cmd->add_option("--alphabet", args.alphabet,
                    "alphabet for regex: specs (default: 01)");
    cmd->add_flag("--auto-complete", args.auto_complete,
                  "complete a partial DFA transition table with an appended dead state");
}

ResolvedLanguage resolve(const LangArgs& args) {
    ResolvedLanguage lang = resolve_spec(args.spec, args.alphabet, args.auto_complete);
    for (const std::string& note : lang.notes) {
        std::cerr << "note: " << note << "\n";
    }
    return lang;
}

/// Words on the command line are raw symbol strings; `<sym>^N` runs are
/// expanded first, and the empty string denotes the empty word.
Word parse_word(const Alphabet& alphabet, const std::string& text) {
    return word_from_string(alphabet, expand_caret(text));
}

std::string show(const Word& w) { return w.empty() ? "λ" : w.str(); }

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// --------------------------------------------------------------- spectrum

struct SpectrumArgs {
    LangArgs lang;
    std::uint64_t jmax = 0;
    std::uint64_t prefix_len = 0;
    std::uint64_t ext_len = 0;
    bool have_prefix_len = false;
    bool have_ext_len = false;
    bool witnesses = false;
    std::string csv_path;
    std::string svg_path;
    bool json = false;
};

int run_spectrum(const SpectrumArgs& a) {
    ResolvedLanguage lang = resolve(a.lang);
    std::vector<SpectrumRow> rows;
    const char* mode = nullptr;
    if (lang.dfa) {
        rows = spectrum_exact(*lang.dfa, a.jmax, a.witnesses);
        mode = "exact";
    } else {
        if (!a.have_prefix_len || !a.have_ext_len) {
            throw UsageError("family languages need --prefix-len and --ext-len "
                             "(bounded enumeration)");
        }
        rows = spectrum_bounded(lang.oracle, a.jmax, a.prefix_len, a.ext_len, a.witnesses);
        mode = "bounded";
    }

    if (!a.csv_path.empty()) {
        write_text_file(a.csv_path, spectrum_csv(rows));
    }
    if (!a.svg_path.empty()) {
        write_text_file(a.svg_path, spectrum_svg(rows));
    }

    if (a.json) {
        ordered_json doc;
        doc["language"] = lang.oracle.name;
        doc["mode"] = mode;
        doc["rows"] = ordered_json::array();
        for (const SpectrumRow& row : rows) {
            ordered_json r;
            r["j"] = row.j;
            r["size"] = row.size;
            r["exact"] = row.exact;
            r["inconclusive_prefixes"] = row.inconclusive_prefixes;
            if (row.witnesses) {
                r["witnesses"] = ordered_json::array();
                for (const ExtensionWitness& w : *row.witnesses) {
                    r["witnesses"].push_back(
                        {{"prefix", w.prefix.str()}, {"extension", w.extension.str()}});
                }
            }
            doc["rows"].push_back(std::move(r));
        }
        emit_json(doc);
        return 0;
    }

    std::printf("%-6s %-8s %-12s %s\n", "j", "size", "kind", "inconclusive-prefixes");
    for (const SpectrumRow& row : rows) {
        std::printf("%-6llu %-8llu %-12s %llu\n",
                    static_cast<unsigned long long>(row.j),
                    static_cast<unsigned long long>(row.size),
                    row.exact ? "exact" : "lower-bound",
                    static_cast<unsigned long long>(row.inconclusive_prefixes));
        if (row.witnesses) {
            for (const ExtensionWitness& w : *row.witnesses) {
                std::printf("       %s  (prefix %s)\n", show(w.extension).c_str(),
                            show(w.prefix).c_str());
            }
        }
    }
    return 0;
}

// -------------------------------------------------------------------- jth

struct JthArgs {
    LangArgs lang;
    std::string prefix;
    std::uint64_t j = 0;
    std::uint64_t ext_len = 0;
    bool have_ext_len = false;
    bool json = false;
};

int run_jth(const JthArgs& a) {
    ResolvedLanguage lang = resolve(a.lang);
    const Word prefix = parse_word(lang.oracle.alphabet, a.prefix);

    std::optional<Word> extension;
    std::string status;
    std::optional<std::uint64_t> found;
    const char* mode = nullptr;
    if (lang.dfa) {
        mode = "exact";
        extension = jth_word_from_state(*lang.dfa, residual_state(*lang.dfa, prefix), a.j);
        status = extension ? "confirmed" : "none";
    } else {
        mode = "bounded";
        if (!a.have_ext_len) {
            throw UsageError("family languages need --ext-len (bounded enumeration)");
        }
        BoundedExtensionResult res = jth_extension_bounded(lang.oracle, prefix, a.j, a.ext_len);
        extension = res.confirmed;
        found = res.found;
        status = extension ? "confirmed" : "inconclusive";
    }

    if (a.json) {
        ordered_json doc;
        doc["language"] = lang.oracle.name;
        doc["prefix"] = prefix.str();
        doc["j"] = a.j;
        doc["mode"] = mode;
        doc["status"] = status;
        doc["extension"] = extension ? ordered_json(extension->str()) : ordered_json(nullptr);
        if (found) {
            doc["found"] = *found;
        }
        emit_json(doc);
    } else if (extension) {
        std::cout << show(*extension) << "\n";
    } else if (status == "none") {
        std::cout << "no extension #" << a.j << ": the prefix has fewer than " << a.j
                  << " extensions\n";
    } else {
        std::cout << "inconclusive: only " << *found << " extensions confirmed within length "
                  << a.ext_len << "\n";
    }
    return extension ? 0 : kExitNegative;
}

// ---------------------------------------------------------------- certify

// The default budgets are deliberately modest: the bounded scan enumerates
// every candidate word up to ext-len for prefixes that never confirm, which
// is exponential in the budget on alphabets with two or more symbols.
struct CertifyArgs {
    LangArgs lang;
    std::uint64_t classes = 0;
    std::uint64_t jmax = 10;
    std::uint64_t prefix_len = 10;
    std::uint64_t ext_len = 12;
    std::string out_path;
    bool json = false;
};

int run_certify(const CertifyArgs& a) {
    ResolvedLanguage lang = resolve(a.lang);
    CertifyOutcome outcome =
        certify_nonregular(lang.oracle, a.classes, a.jmax, a.prefix_len, a.ext_len);

    if (const auto* cert = std::get_if<Certificate>(&outcome)) {
        write_text_file(a.out_path, certificate_to_json(*cert));
        if (a.json) {
            ordered_json doc;
            doc["status"] = "certificate";
            doc["language"] = cert->language;
            doc["j"] = cert->j;
            doc["classes"] = cert->entries.size();
            doc["path"] = a.out_path;
            emit_json(doc);
        } else {
            std::cout << "certificate: " << cert->entries.size() << " classes at j=" << cert->j
                      << ", written to " << a.out_path << "\n";
        }
        return 0;
    }

    const auto& failure = std::get<CertifyFailure>(outcome);
    if (a.json) {
        ordered_json doc;
        doc["status"] = "failure";
        doc["requested_classes"] = failure.requested_classes;
        doc["best_j"] = failure.best_j;
        doc["best_count"] = failure.best_count;
        emit_json(doc);
    } else {
        std::cout << "no certificate: requested " << failure.requested_classes
                  << " classes, best was " << failure.best_count
                  << " distinct confirmed extensions at j=" << failure.best_j << "\n";
    }
    return kExitNegative;
}

// ------------------------------------------------------------- check-cert

struct CheckCertArgs {
    LangArgs lang;
    std::string cert_path;
    bool json = false;
};

int run_check_cert(const CheckCertArgs& a) {
    ResolvedLanguage lang = resolve(a.lang);
    Certificate cert = load_certificate_file(a.cert_path, lang.oracle.alphabet);
    if (cert.language != lang.oracle.name) {
        std::cerr << "note: certificate was produced for \"" << cert.language
                  << "\", checking it against \"" << lang.oracle.name << "\"\n";
    }
    VerificationResult res = verify_certificate(lang.oracle, cert);

    if (a.json) {
        ordered_json doc;
        doc["valid"] = res.ok;
        doc["classes"] = cert.entries.size();
        doc["j"] = cert.j;
        doc["problems"] = res.problems;
        emit_json(doc);
    } else if (res.ok) {
        std::cout << "valid certificate: " << cert.entries.size() << " classes at j=" << cert.j
                  << "\n";
    } else {
        std::cout << "invalid certificate:\n";
        for (const std::string& p : res.problems) {
            std::cout << "  - " << p << "\n";
        }
    }
    return res.ok ? 0 : kExitNegative;
}

// -------------------------------------------------------------- ue-refute

struct UeRefuteArgs {
    LangArgs lang;
    std::string word;
    std::uint64_t prefix_len = 0;
    bool json = false;
};

int run_ue_refute(const UeRefuteArgs& a) {
    ResolvedLanguage lang = resolve(a.lang);
    const Word y = parse_word(lang.oracle.alphabet, a.word);
    std::optional<Word> refuter = universal_extension_refute(lang.oracle, y, a.prefix_len);

    if (a.json) {
        ordered_json doc;
        doc["language"] = lang.oracle.name;
        doc["word"] = y.str();
        doc["prefix_len"] = a.prefix_len;
        doc["refuted"] = refuter.has_value();
        doc["prefix"] = refuter ? ordered_json(refuter->str()) : ordered_json(nullptr);
        emit_json(doc);
    } else if (refuter) {
        std::cout << "refuted by prefix: " << show(*refuter) << " (the concatenation is not a "
                  << "member)\n";
    } else {
        std::cout << "unrefuted: every prefix of length up to " << a.prefix_len
                  << " extends by the word into the language\n";
    }
    return refuter ? kExitNegative : 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::vector<std::string> ids;
    std::uint64_t scale = 1;
    std::string json_path;
    bool strict = false;
    bool list = false;
    std::uint64_t prefix_len = 0;
    std::uint64_t ext_len = 0;
    std::uint64_t jmax = 0;
    std::uint64_t nmax = 0;
    bool have_prefix_len = false;
    bool have_ext_len = false;
    bool have_jmax = false;
    bool have_nmax = false;
};

int run_verify(const VerifyArgs& a) {
    if (a.list) {
        std::printf("%-24s %-40s %s\n", "id", "anchor", "default budgets (P/E/jmax/nmax)");
        for (const ClaimInfo& info : list_claims()) {
            std::printf("%-24s %-40s %llu/%llu/%llu/%llu\n", info.id.c_str(),
                        info.anchor.c_str(),
                        static_cast<unsigned long long>(info.default_budgets.prefix_len),
                        static_cast<unsigned long long>(info.default_budgets.ext_len),
                        static_cast<unsigned long long>(info.default_budgets.jmax),
                        static_cast<unsigned long long>(info.default_budgets.nmax));
        }
        return 0;
    }

    BudgetOverrides overrides;
    if (a.have_prefix_len) {
        overrides.prefix_len = a.prefix_len;
    }
    if (a.have_ext_len) {
        overrides.ext_len = a.ext_len;
    }
    if (a.have_jmax) {
        overrides.jmax = a.jmax;
    }
    if (a.have_nmax) {
        overrides.nmax = a.nmax;
    }

    HarnessReport report = run_claims(a.ids, a.scale, overrides);
    std::cout << report_to_text(report);
    if (!a.json_path.empty()) {
        write_text_file(a.json_path, report_to_json(report));
    }
    if (report.summary.fail > 0) {
        return kExitNegative;
    }
    if (a.strict && report.summary.pass != report.results.size()) {
        return kExitNegative;
    }
    return 0;
}

// --------------------------------------------------------------- families

int run_families() {
    std::printf("%-22s %-9s %s\n", "family", "alphabet", "membership");
    std::printf("%-22s %-9s %s\n", "family:eq-count", "01", "0^n 1^n for n >= 0");
    std::printf("%-22s %-9s %s\n", "family:palindrome", "01", "words equal to their reversal");
    std::printf("%-22s %-9s %s\n", "family:zeros?I=...", "0",
                "0^n for n in the index set I");
    std::printf("%-22s %-9s %s\n", "family:xxry", "01",
                "x x^R y with x, y nonempty (x^R = reversal)");
    std::printf("%-22s %-9s %s\n", "family:coprime", "01",
                "0^m 1^n with m, n >= 1 and gcd(m, n) = 1");
    std::printf("%-22s %-9s %s\n", "family:c41?I=...", "0",
                "0^n for n in the derived set I' = {3i} u {3i+1 : i in I} u {3i+2 : i not in I}");
    std::printf("%-22s %-9s %s\n", "family:c51", "01",
                "staged three-block words 0^n 1 0^m 1 0^k 1");
    std::printf("%-22s %-9s %s\n", "family:kamae-weiss", "01",
                "u 1 1 0^n 1 0^n for n >= 1 and arbitrary u");
    std::printf("\nindex sets (for zeros and c41):\n");
    std::printf("  I=evens | I=odds | I=primes | I=list&values=a,b,c | I=pseudo&seed=S\n");
    std::printf("  (I=pseudo requires seed=; I=list accepts an empty value list)\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app("ordinal extension sets, spectra, and nonregularity certificates");
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "sizes of the j-th extension sets for j = 1..jmax");
    add_lang_options(spectrum_cmd, spectrum_args.lang);
    spectrum_cmd->add_option("--jmax", spectrum_args.jmax, "largest j to report")
        ->required()
        ->check(CLI::PositiveNumber);
    auto* sp_p = spectrum_cmd->add_option("--prefix-len", spectrum_args.prefix_len,
                                          "prefix length budget (bounded mode)");
    auto* sp_e = spectrum_cmd->add_option("--ext-len", spectrum_args.ext_len,
                                          "extension length budget (bounded mode)");
    spectrum_cmd->add_flag("--witnesses", spectrum_args.witnesses,
                           "include the least witness prefix for every extension");
    spectrum_cmd->add_option("--csv", spectrum_args.csv_path, "write rows as CSV to this path");
    spectrum_cmd->add_option("--svg", spectrum_args.svg_path,
                             "write a bar chart as SVG to this path");
    spectrum_cmd->add_flag("--json", spectrum_args.json, "print rows as JSON");

    JthArgs jth_args;
    auto* jth_cmd = app.add_subcommand("jth", "the j-th extension of a prefix");
    add_lang_options(jth_cmd, jth_args.lang);
    jth_cmd->add_option("--prefix", jth_args.prefix,
                        "prefix word (raw symbols; <sym>^N runs allowed; \"\" is the empty word)")
        ->required();
    jth_cmd->add_option("--j", jth_args.j, "extension rank (1-based)")
        ->required()
        ->check(CLI::PositiveNumber);
    auto* jth_e = jth_cmd->add_option("--ext-len", jth_args.ext_len,
                                      "extension length budget (bounded mode)");
    jth_cmd->add_flag("--json", jth_args.json, "print the result as JSON");

    CertifyArgs certify_args;
    auto* certify_cmd =
        app.add_subcommand("certify", "search for a nonregularity certificate with k classes");
    add_lang_options(certify_cmd, certify_args.lang);
    certify_cmd->add_option("--classes", certify_args.classes, "required distinct classes (>= 2)")
        ->required()
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--jmax", certify_args.jmax, "largest extension rank to try");
    certify_cmd->add_option("--prefix-len", certify_args.prefix_len, "prefix length budget");
    certify_cmd->add_option("--ext-len", certify_args.ext_len, "extension length budget");
    certify_cmd->add_option("--out", certify_args.out_path, "certificate output path")
        ->required();
    certify_cmd->add_flag("--json", certify_args.json, "print the outcome as JSON");

    CheckCertArgs check_args;
    auto* check_cmd =
        app.add_subcommand("check-cert", "independently verify a certificate file");
    add_lang_options(check_cmd, check_args.lang);
    check_cmd->add_option("--cert", check_args.cert_path, "certificate file to check")
        ->required();
    check_cmd->add_flag("--json", check_args.json, "print the verdict as JSON");

    UeRefuteArgs ue_args;
    auto* ue_cmd = app.add_subcommand(
        "ue-refute", "search for a prefix refuting that a word is a universal extension");
    add_lang_options(ue_cmd, ue_args.lang);
    ue_cmd->add_option("--word", ue_args.word,
                       "candidate universal extension (raw symbols; <sym>^N runs allowed)")
        ->required();
    ue_cmd->add_option("--prefix-len", ue_args.prefix_len, "prefix length budget")->required();
    ue_cmd->add_flag("--json", ue_args.json, "print the result as JSON");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "run the claim-verification harness (all claims by default)");
    verify_cmd->add_option("ids", verify_args.ids, "claim ids to run (default: all)");
    verify_cmd->add_option("--scale", verify_args.scale, "multiply all default budgets")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--json", verify_args.json_path, "write the full report to this path");
    verify_cmd->add_flag("--strict", verify_args.strict,
                         "exit nonzero unless every claim passes");
    verify_cmd->add_flag("--list", verify_args.list, "list claim ids and default budgets");
    auto* v_p = verify_cmd->add_option("--prefix-len", verify_args.prefix_len,
                                       "override the prefix length budget for every claim run");
    auto* v_e = verify_cmd->add_option("--ext-len", verify_args.ext_len,
                                       "override the extension length budget");
    auto* v_j = verify_cmd->add_option("--jmax", verify_args.jmax, "override the jmax budget");
    auto* v_n = verify_cmd->add_option("--nmax", verify_args.nmax, "override the nmax budget");

    auto* families_cmd =
        app.add_subcommand("families", "list built-in language families and their parameters");

    int exit_code = 0;
    spectrum_cmd->callback([&] {
        spectrum_args.have_prefix_len = sp_p->count() > 0;
        spectrum_args.have_ext_len = sp_e->count() > 0;
        exit_code = run_spectrum(spectrum_args);
    });
    jth_cmd->callback([&] {
        jth_args.have_ext_len = jth_e->count() > 0;
        exit_code = run_jth(jth_args);
    });
    certify_cmd->callback([&] { exit_code = run_certify(certify_args); });
    check_cmd->callback([&] { exit_code = run_check_cert(check_args); });
    ue_cmd->callback([&] { exit_code = run_ue_refute(ue_args); });
    verify_cmd->callback([&] {
        verify_args.have_prefix_len = v_p->count() > 0;
        verify_args.have_ext_len = v_e->count() > 0;
        verify_args.have_jmax = v_j->count() > 0;
        verify_args.have_nmax = v_n->count() > 0;
        exit_code = run_verify(verify_args);
    });
    families_cmd->callback([&] { exit_code = run_families(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RegexParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DfaFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CertificateFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
