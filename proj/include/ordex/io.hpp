#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ordex/dfa.hpp"
#include "ordex/engine.hpp"

namespace ordex {

/// Structural problem in a DFA file (bad JSON, missing fields, partial
/// transition table without auto-complete, out-of-range targets).
class DfaFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural problem in a certificate file; distinct from a certificate
/// that is well-formed but fails verification.
class CertificateFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DfaLoadResult {
    Dfa dfa;
    std::vector<std::string> notes;  // e.g. the auto-completion record
};

/// Parses the JSON DFA format:
///   { "alphabet": "01", "states": N, "start": s, "accepting": [..],
///     "transitions": [[t00, t01], ...] }
/// A transition entry of null or -1 marks a missing edge; missing edges are
/// rejected unless `auto_complete` is set, in which case a fresh dead state
/// absorbs them (recorded in `notes`).
DfaLoadResult dfa_from_json(const std::string& text, bool auto_complete);
DfaLoadResult load_dfa_file(const std::string& path, bool auto_complete);
std::string dfa_to_json(const Dfa& dfa);

/// Certificate JSON:
///   { "language": spec string, "j": j, "ext_search_bound": E,
///     "entries": [{"prefix": "...", "extension": "..."}, ...] }
/// Words are symbol strings over `alphabet`; the empty word is "".
Certificate certificate_from_json(const std::string& text, const Alphabet& alphabet);
Certificate load_certificate_file(const std::string& path, const Alphabet& alphabet);
std::string certificate_to_json(const Certificate& cert);

/// CSV with header j,size,exact,inconclusive_prefixes.
std::string spectrum_csv(const std::vector<SpectrumRow>& rows);

/// Deterministic static bar chart (j horizontal, size vertical); bars for
/// non-exact rows are hatched to mark lower bounds.
std::string spectrum_svg(const std::vector<SpectrumRow>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ordex
