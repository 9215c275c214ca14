// Acceptance gate: runs the eleven acceptance criteria at their stated
// budgets and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria (0 = all green).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>

#include "ordex/dfa.hpp"
#include "ordex/engine.hpp"
#include "ordex/families.hpp"
#include "ordex/harness.hpp"
#include "ordex/oracle.hpp"
#include "ordex/regex.hpp"

using namespace ordex;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

const Alphabet& binary_ab() {
    static const Alphabet a("01");
    return a;
}

Word zeros(const Alphabet& a, std::uint64_t n) {
    return Word(a, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
}

bool claim_passes(const std::string& id, std::string& detail) {
    const ClaimResult r = run_claim(id);
    if (r.status == ClaimStatus::Pass) {
        return true;
    }
    detail += id;
    detail += " is ";
    detail += to_string(r.status);
    if (!r.witnesses.empty()) {
        detail += " (" + r.witnesses.front() + ")";
    }
    detail += "; ";
    return false;
}

// 1. Exact extension-set sizes stay below the automaton index.
Outcome criterion_1() {
    std::mt19937_64 rng(0xACCE57);
    for (int i = 0; i < 120; ++i) {
        const auto states = static_cast<std::uint32_t>(1 + rng() % 8);
        std::vector<std::uint32_t> transitions(states * 2);
        for (auto& t : transitions) {
            t = static_cast<std::uint32_t>(rng() % states);
        }
        std::vector<bool> accepting(states);
        for (std::uint32_t q = 0; q < states; ++q) {
            accepting[q] = rng() % 2 == 1;
        }
        Dfa dfa(binary_ab(), states, 0, std::move(accepting), std::move(transitions));
        const std::uint32_t index = mn_index(dfa);
        for (std::uint64_t j = 1; j <= 50; ++j) {
            const std::size_t size = ordinal_set_exact(dfa, j).size();
            if (size > index) {
                return {false, "automaton #" + std::to_string(i) + " at j=" + std::to_string(j) +
                                   ": " + std::to_string(size) + " > index " +
                                   std::to_string(index)};
            }
        }
    }
    std::string detail = "120 random automata, j <= 50, sizes bounded by the index";
    if (!claim_passes("lemma-2.1", detail)) {
        return {false, detail};
    }
    return {true, detail};
}

// 2. Bounded engine confirmed sets equal exact sets (P=8, E=10, j<=6).
Outcome criterion_2() {
    const std::vector<std::string> patterns = {"0*1*", "(0|1)*11", "(00)*", "0*1*0*"};
    for (const std::string& pattern : patterns) {
        Dfa dfa = minimize(compile_regex(parse_regex(pattern, binary_ab())));
        LanguageOracle oracle = oracle_from_dfa(dfa, "regex:" + pattern);
        for (std::uint64_t j = 1; j <= 6; ++j) {
            std::set<std::string> exact;
            for (const Word& w : ordinal_set_exact(dfa, j)) {
                exact.insert(w.str());
            }
            std::set<std::string> bounded;
            for (const ExtensionWitness& w : ordinal_set_bounded(oracle, j, 8, 10).confirmed) {
                bounded.insert(w.extension.str());
            }
            if (bounded != exact) {
                std::string detail =
                    "regex " + pattern + " at j=" + std::to_string(j) + ": bounded {";
                for (const std::string& s : bounded) {
                    detail += s + ",";
                }
                detail += "} != exact {";
                for (const std::string& s : exact) {
                    detail += s + ",";
                }
                detail += "} at P=8,E=10";
                if (pattern == "(00)*" && j == 6) {
                    detail += " (the 0^11 extension exceeds the stated length budget by one)";
                }
                return {false, detail};
            }
        }
    }
    return {true, "bounded == exact on all four regexes for j <= 6"};
}

// 3. k=10 certificate at j=1 for the block-count family, round-tripped.
Outcome criterion_3() {
    LanguageOracle eq = family_oracle({FamilyTag::EqCount, std::nullopt});
    CertifyOutcome outcome = certify_nonregular(eq, 10, 1, 12, 12);
    const auto* cert = std::get_if<Certificate>(&outcome);
    if (!cert) {
        return {false, "no 10-class certificate found"};
    }
    if (cert->j != 1 || cert->entries.size() != 10) {
        return {false, "unexpected certificate shape (j=" + std::to_string(cert->j) + ", " +
                           std::to_string(cert->entries.size()) + " entries)"};
    }
    VerificationResult check = verify_certificate(eq, *cert);
    if (!check.ok) {
        return {false, "independent checker rejected: " + check.problems.front()};
    }
    return {true, "10 classes at j=1, producer and checker agree"};
}

// 4. Bounded first-extension set for palindromes contains 0^1..0^10.
Outcome criterion_4() {
    LanguageOracle pal = family_oracle({FamilyTag::Palindrome, std::nullopt});
    BoundedOrdinalSet set = ordinal_set_bounded(pal, 1, 11, 10);
    std::set<std::string> confirmed;
    for (const ExtensionWitness& w : set.confirmed) {
        confirmed.insert(w.extension.str());
    }
    for (std::uint64_t n = 1; n <= 10; ++n) {
        if (!confirmed.count(std::string(n, '0'))) {
            return {false, "0^" + std::to_string(n) + " missing from the first-extension set"};
        }
    }
    return {true, "0^n for n=1..10 all confirmed in the first-extension set"};
}

// 5. Prime-length language: second-extension set holds the prime gaps.
Outcome criterion_5() {
    LanguageOracle primes = family_oracle({FamilyTag::Zeros, IndexSet::primes()});
    BoundedOrdinalSet set = ordinal_set_bounded(primes, 2, 200, 60);
    std::set<std::uint64_t> sizes;
    for (const ExtensionWitness& w : set.confirmed) {
        sizes.insert(w.extension.size());
    }
    if (sizes.size() < 6) {
        return {false, "only " + std::to_string(sizes.size()) + " confirmed second extensions"};
    }
    for (std::uint64_t gap : gaps(IndexSet::primes(), 200)) {
        if (!sizes.count(gap)) {
            return {false, "prime gap " + std::to_string(gap) + " missing"};
        }
    }
    std::string detail = std::to_string(sizes.size()) +
                         " distinct confirmed second extensions, covering every prime gap "
                         "realised below 200";
    if (!claim_passes("cor-3.4-primes", detail)) {
        return {false, detail};
    }
    return {true, detail};
}

// 6. Unary staged-extension bounds: at most 3 values, inside the level sets.
Outcome criterion_6() {
    const std::vector<IndexSet> sets = {IndexSet::evens(), IndexSet::primes(),
                                        IndexSet::pseudorandom(7)};
    for (const IndexSet& I : sets) {
        for (std::uint64_t j = 1; j <= 40; ++j) {
            std::set<std::uint64_t> lengths;
            const LengthSet envelope = bcal(j);
            if (envelope.size() > 3) {
                return {false, "envelope at stage " + std::to_string(j) + " has " +
                                   std::to_string(envelope.size()) + " elements"};
            }
            for (int m = 0; m < 3; ++m) {
                if (!ls_subset(bset(m, j), envelope)) {
                    return {false, "level " + std::to_string(m) + " not inside the envelope at " +
                                       "stage " + std::to_string(j)};
                }
            }
            for (std::uint64_t n = 0; n <= 120; ++n) {
                const std::uint64_t len = a_ext_len(I, n, j);
                lengths.insert(len);
                const LengthSet& level = bset(static_cast<int>(n % 3), j);
                if (!std::binary_search(level.begin(), level.end(), len)) {
                    return {false, "extension of 0^" + std::to_string(n) + " at stage " +
                                       std::to_string(j) + " outside its level set"};
                }
            }
            if (lengths.size() > 3) {
                return {false, std::to_string(lengths.size()) + " distinct extensions at stage " +
                                   std::to_string(j)};
            }
        }
    }
    std::string detail = "three index sets, j <= 40, n <= 120: <= 3 values, all in level sets";
    for (const char* id : {"lemma-4.2", "lemma-4.5", "eq-4.9", "eq-A.21"}) {
        if (!claim_passes(id, detail)) {
            return {false, detail};
        }
    }
    return {true, detail};
}

// 7. Length-set identities for j <= 60; the literal third-part reading of the
// subset lemma must surface as a DISCREPANCY with the j=1 witness.
Outcome criterion_7() {
    for (std::uint64_t j = 1; j <= 60; ++j) {
        if (ls_shift(bset(0, j), 3) != bset(0, j + 2) ||
            ls_shift(bset(1, j), 3) != bset(1, j + 2) ||
            (j >= 2 && ls_shift(bset(2, j), 3) != bset(2, j + 2))) {
            return {false, "shift identity broken at stage " + std::to_string(j)};
        }
        if (!ls_subset(ls_union(bset(0, j), bset(1, j)), bset(2, j))) {
            return {false, "union containment broken at stage " + std::to_string(j)};
        }
        if (j % 2 == 0 && !ls_subset(ls_shift(bset(1, j), 1), bset(2, j))) {
            return {false, "even-stage shifted containment broken at " + std::to_string(j)};
        }
        if (j >= 2 && !ls_subset(ls_quotient0(bset(1, j)), bset(2, j))) {
            return {false, "quotient containment broken at " + std::to_string(j)};
        }
        if (!ls_subset(ls_shift(bset(0, j), 1), bset(2, j))) {
            return {false, "level-0 shifted containment broken at " + std::to_string(j)};
        }
        if (!ls_subset(bset(1, j + 1), ls_shift(bset(2, j), 1))) {
            return {false, "stage-up containment broken at " + std::to_string(j)};
        }
    }
    const ClaimResult a3 = run_claim("lemma-A.3");
    if (a3.status != ClaimStatus::Discrepancy) {
        return {false, std::string("literal reading reported ") + to_string(a3.status) +
                           ", expected DISCREPANCY"};
    }
    bool has_j1 = false;
    for (const std::string& w : a3.witnesses) {
        if (w.find("j=1") != std::string::npos) {
            has_j1 = true;
        }
    }
    if (!has_j1) {
        return {false, "discrepancy witness for j=1 missing"};
    }
    return {true, "identities hold for j <= 60; literal reading flagged with the j=1 witness"};
}

// 8. Window-count recurrences.
Outcome criterion_8() {
    std::string detail = "recurrences hold for n <= 100, j <= 30, three index sets";
    if (!claim_passes("obs-A.4", detail)) {
        return {false, detail};
    }
    return {true, detail};
}

// 9. Staged construction: lower bound, extension list, decomposition.
Outcome criterion_9() {
    std::string detail;
    bool ok = true;
    ok &= claim_passes("thm-5.2-lower", detail);
    ok &= claim_passes("thm-5.2-ext-list", detail);
    ok &= claim_passes("thm-5.2-decomposition", detail);
    if (!ok) {
        return {false, detail};
    }
    return {true, "lower bound, extension list, and decomposition all verified"};
}

// 10. Universal extensions for the suffix-pattern language.
Outcome criterion_10() {
    std::string detail;
    bool ok = true;
    ok &= claim_passes("ex-5.5-ue", detail);
    ok &= claim_passes("lemma-5.3-kw", detail);
    if (!ok) {
        return {false, detail};
    }
    return {true, "(11010)^n unrefuted (n <= 3); all confirmed extensions <= (11010)^j"};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip_wall_time(std::string text) {
    std::string out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("\"wall_time_s\"") == std::string::npos) {
            out += line;
            out += '\n';
        }
    }
    return out;
}

// 11. The verify front end: expected summary 23/2/0/0 with the two named
// discrepancies, runtime < 5 minutes, byte-stable modulo wall time.
Outcome criterion_11() {
    const std::string report_path = "acceptance_report.json";
    const std::string rerun_path = "acceptance_report_rerun.json";
    const std::string command = std::string(ORDEX_BIN) + " verify --scale 1 --json " +
                                report_path + " > acceptance_verify_out.txt 2>&1";
    const int status1 = std::system(command.c_str());
    const std::string command2 = std::string(ORDEX_BIN) + " verify --scale 1 --json " +
                                 rerun_path + " > acceptance_verify_out.txt 2>&1";
    const int status2 = std::system(command2.c_str());
    std::remove("acceptance_verify_out.txt");
    if (!WIFEXITED(status1) || !WIFEXITED(status2)) {
        return {false, "verify run did not exit normally"};
    }
    const std::string raw1 = slurp(report_path);
    const std::string raw2 = slurp(rerun_path);
    std::remove(report_path.c_str());
    std::remove(rerun_path.c_str());
    if (strip_wall_time(raw1) != strip_wall_time(raw2)) {
        return {false, "reports differ across runs beyond wall_time fields"};
    }

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(raw1);
    } catch (const nlohmann::json::exception& e) {
        return {false, std::string("report is not valid JSON: ") + e.what()};
    }
    const auto& summary = doc.at("summary");
    const std::uint64_t pass = summary.at("pass").get<std::uint64_t>();
    const std::uint64_t fail = summary.at("fail").get<std::uint64_t>();
    const std::uint64_t inconclusive = summary.at("inconclusive").get<std::uint64_t>();
    const std::uint64_t discrepancy = summary.at("discrepancy").get<std::uint64_t>();
    std::vector<std::string> discrepancy_ids;
    for (const auto& row : doc.at("results")) {
        if (row.at("status").get<std::string>() == "DISCREPANCY") {
            discrepancy_ids.push_back(row.at("id").get<std::string>());
        }
    }
    const bool summary_as_stated =
        pass == 23 && discrepancy == 2 && fail == 0 && inconclusive == 0 &&
        discrepancy_ids == std::vector<std::string>{"ex-3.5-coprime", "lemma-A.3"};
    if (!summary_as_stated) {
        std::string detail = "stated 23 PASS / 2 DISCREPANCY; measured " + std::to_string(pass) +
                             " PASS / " + std::to_string(discrepancy) + " DISCREPANCY (";
        for (const std::string& id : discrepancy_ids) {
            detail += id + ",";
        }
        detail += "), " + std::to_string(fail) + " FAIL, " + std::to_string(inconclusive) +
                  " INCONCLUSIVE; the extra discrepancy is the decomposition claim, whose "
                  "stated union provably misses confirmed extensions";
        return {false, detail};
    }
    return {true, "summary and discrepancy set exactly as stated; reports byte-stable"};
}

struct Criterion {
    int number;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "extension-set sizes bounded by the automaton index", 30.0, criterion_1},
        {2, "bounded engine agrees with the exact engine", 30.0, criterion_2},
        {3, "10-class certificate round trip", 5.0, criterion_3},
        {4, "palindrome first-extension set contains 0^1..0^10", 10.0, criterion_4},
        {5, "prime-gap second extensions", 10.0, criterion_5},
        {6, "staged unary extension bounds", 20.0, criterion_6},
        {7, "length-set identities and the flagged literal reading", 5.0, criterion_7},
        {8, "window-count recurrences", 20.0, criterion_8},
        {9, "staged construction: lower bound, list, decomposition", 60.0, criterion_9},
        {10, "universal extensions of the suffix-pattern language", 60.0, criterion_10},
        {11, "verify front end summary, stability, runtime", 300.0, criterion_11},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.run();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= c.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " [exceeded the " + std::to_string(c.budget_seconds) + "s budget]";
        }
        std::printf("criterion %2d: %s (%7.3f s) — %s — %s\n", c.number,
                    outcome.pass ? "PASS" : "FAIL", elapsed, c.label, outcome.detail.c_str());
        if (!outcome.pass) {
            ++failures;
        }
    }
    std::printf("acceptance: %d of %zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
