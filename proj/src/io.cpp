#include "ordex/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ordex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw std::runtime_error(std::string(what) + ": not valid JSON");
    }
    return doc;
}

}  // namespace

// --------------------------------------------------------------------- DFA

DfaLoadResult dfa_from_json(const std::string& text, bool auto_complete) {
    json doc;
    try {
        doc = parse_json(text, "DFA file");
    } catch (const std::runtime_error& e) {
        throw DfaFormatError(e.what());
    }
    if (!doc.is_object()) {
        throw DfaFormatError("DFA file: top level must be an object");
    }
    for (const char* field : {"alphabet", "states", "start", "accepting", "transitions"}) {
        if (!doc.contains(field)) {
            throw DfaFormatError(std::string("DFA file: missing field \"") + field + "\"");
        }
    }
    if (!doc["alphabet"].is_string()) {
        throw DfaFormatError("DFA file: \"alphabet\" must be a string");
    }
    Alphabet alphabet = [&doc] {
        try {
            return Alphabet(doc["alphabet"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw DfaFormatError(std::string("DFA file: ") + e.what());
        }
    }();

    if (!doc["states"].is_number_unsigned() || doc["states"].get<std::uint64_t>() == 0) {
        throw DfaFormatError("DFA file: \"states\" must be a positive integer");
    }
    const auto states = static_cast<std::uint32_t>(doc["states"].get<std::uint64_t>());

    if (!doc["start"].is_number_unsigned() || doc["start"].get<std::uint64_t>() >= states) {
        throw DfaFormatError("DFA file: \"start\" must name a state");
    }
    const auto start = static_cast<std::uint32_t>(doc["start"].get<std::uint64_t>());

    std::vector<bool> accepting(states, false);
    if (!doc["accepting"].is_array()) {
        throw DfaFormatError("DFA file: \"accepting\" must be an array of state ids");
    }
    for (const json& entry : doc["accepting"]) {
        if (!entry.is_number_unsigned() || entry.get<std::uint64_t>() >= states) {
            throw DfaFormatError("DFA file: accepting entry out of range");
        }
        accepting[static_cast<std::size_t>(entry.get<std::uint64_t>())] = true;
    }

    const json& table = doc["transitions"];
    if (!table.is_array() || table.size() != states) {
        throw DfaFormatError("DFA file: \"transitions\" must have one row per state");
    }

    std::vector<std::uint32_t> transitions;
    transitions.reserve(static_cast<std::size_t>(states) * alphabet.size());
    bool has_gap = false;
    for (std::size_t q = 0; q < states; ++q) {
        const json& row = table[q];
        if (!row.is_array() || row.size() > alphabet.size()) {
            throw DfaFormatError("DFA file: transition row " + std::to_string(q) +
                                 " must list at most one target per symbol");
        }
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            bool missing = a >= row.size() || row[a].is_null() ||
                           (row[a].is_number_integer() && row[a].get<std::int64_t>() == -1);
            if (missing) {
                has_gap = true;
                transitions.push_back(states);  // provisional dead-state id
                continue;
            }
            if (!row[a].is_number_unsigned() || row[a].get<std::uint64_t>() >= states) {
                throw DfaFormatError("DFA file: transition target out of range in row " +
                                     std::to_string(q));
            }
            transitions.push_back(static_cast<std::uint32_t>(row[a].get<std::uint64_t>()));
        }
    }

    std::vector<std::string> notes;
    std::uint32_t final_states = states;
    if (has_gap) {
        if (!auto_complete) {
            throw DfaFormatError(
                "DFA file: transition table is partial (use --auto-complete to add a dead state)");
        }
        final_states = states + 1;
        accepting.push_back(false);
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            transitions.push_back(states);  // the dead state loops to itself
        }
        notes.push_back("auto-complete: appended dead state " + std::to_string(states) +
                        " to absorb missing transitions");
    }

    try {
        return DfaLoadResult{
            Dfa(std::move(alphabet), final_states, start, std::move(accepting),
                std::move(transitions)),
            std::move(notes)};
    } catch (const std::invalid_argument& e) {
        throw DfaFormatError(std::string("DFA file: ") + e.what());
    }
}

DfaLoadResult load_dfa_file(const std::string& path, bool auto_complete) {
    return dfa_from_json(read_text_file(path), auto_complete);
}

std::string dfa_to_json(const Dfa& dfa) {
    ordered_json doc;
    doc["alphabet"] = dfa.alphabet().symbols();
    doc["states"] = dfa.state_count();
    doc["start"] = dfa.start();
    std::vector<std::uint32_t> accepting;
    for (std::uint32_t q = 0; q < dfa.state_count(); ++q) {
        if (dfa.is_accepting(q)) {
            accepting.push_back(q);
        }
    }
    doc["accepting"] = accepting;
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(dfa.state_count());
    for (std::uint32_t q = 0; q < dfa.state_count(); ++q) {
        std::vector<std::uint32_t> row;
        row.reserve(dfa.alphabet().size());
        for (std::uint32_t a = 0; a < dfa.alphabet().size(); ++a) {
            row.push_back(dfa.next_state(q, a));
        }
        rows.push_back(std::move(row));
    }
    doc["transitions"] = rows;
    return doc.dump(2) + "\n";
}

// ------------------------------------------------------------- certificates

Certificate certificate_from_json(const std::string& text, const Alphabet& alphabet) {
    json doc;
    try {
        doc = parse_json(text, "certificate");
    } catch (const std::runtime_error& e) {
        throw CertificateFormatError(e.what());
    }
    if (!doc.is_object()) {
        throw CertificateFormatError("certificate: top level must be an object");
    }
    for (const char* field : {"language", "j", "ext_search_bound", "entries"}) {
        if (!doc.contains(field)) {
            throw CertificateFormatError(std::string("certificate: missing field \"") + field +
                                         "\"");
        }
    }
    if (!doc["language"].is_string() || !doc["j"].is_number_unsigned() ||
        !doc["ext_search_bound"].is_number_unsigned() || !doc["entries"].is_array()) {
        throw CertificateFormatError("certificate: field has the wrong type");
    }

    Certificate cert;
    cert.language = doc["language"].get<std::string>();
    cert.j = doc["j"].get<std::uint64_t>();
    cert.ext_search_bound = doc["ext_search_bound"].get<std::uint64_t>();
    if (cert.j == 0) {
        throw CertificateFormatError("certificate: j must be positive");
    }
    for (const json& entry : doc["entries"]) {
        if (!entry.is_object() || !entry.contains("prefix") || !entry.contains("extension") ||
            !entry["prefix"].is_string() || !entry["extension"].is_string()) {
            throw CertificateFormatError(
                "certificate: each entry needs string fields \"prefix\" and \"extension\"");
        }
        try {
            cert.entries.push_back(
                ExtensionWitness{word_from_string(alphabet, entry["prefix"].get<std::string>()),
                                 word_from_string(alphabet, entry["extension"].get<std::string>())});
        } catch (const std::invalid_argument& e) {
            throw CertificateFormatError(std::string("certificate: ") + e.what());
        }
    }
    if (cert.entries.empty()) {
        throw CertificateFormatError("certificate: no entries");
    }
    return cert;
}

Certificate load_certificate_file(const std::string& path, const Alphabet& alphabet) {
    return certificate_from_json(read_text_file(path), alphabet);
}

std::string certificate_to_json(const Certificate& cert) {
    ordered_json doc;
    doc["language"] = cert.language;
    doc["j"] = cert.j;
    doc["ext_search_bound"] = cert.ext_search_bound;
    doc["entries"] = ordered_json::array();
    for (const ExtensionWitness& entry : cert.entries) {
        ordered_json row;
        row["prefix"] = entry.prefix.str();
        row["extension"] = entry.extension.str();
        doc["entries"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

// ------------------------------------------------------------------ spectra

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
    std::string out = "j,size,exact,inconclusive_prefixes\n";
    for (const SpectrumRow& row : rows) {
        out += std::to_string(row.j);
        out += ',';
        out += std::to_string(row.size);
        out += ',';
        out += row.exact ? "true" : "false";
        out += ',';
        out += std::to_string(row.inconclusive_prefixes);
        out += '\n';
    }
    return out;
}

std::string spectrum_svg(const std::vector<SpectrumRow>& rows) {
    const int bar_width = 34;
    const int bar_gap = 14;
    const int left = 56;
    const int bottom_pad = 42;
    const int top_pad = 24;
    const int plot_height = 240;
    const int width = left + static_cast<int>(rows.size()) * (bar_width + bar_gap) + 24;
    const int height = top_pad + plot_height + bottom_pad;

    std::uint64_t max_size = 1;
    for (const SpectrumRow& row : rows) {
        max_size = std::max(max_size, row.size);
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "  <defs>\n"
        << "    <pattern id=\"lowerbound\" width=\"6\" height=\"6\" patternTransform=\"rotate(45)\""
           " patternUnits=\"userSpaceOnUse\">\n"
        << "      <rect width=\"6\" height=\"6\" fill=\"#9ecae1\"/>\n"
        << "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#3182bd\" stroke-width=\"3\"/>\n"
        << "    </pattern>\n"
        << "  </defs>\n";
    svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    const int axis_y = top_pad + plot_height;
    svg << "  <line x1=\"" << left << "\" y1=\"" << top_pad << "\" x2=\"" << left << "\" y2=\""
        << axis_y << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << left << "\" y1=\"" << axis_y << "\" x2=\"" << (width - 12)
        << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << (left - 8) << "\" y=\"" << (top_pad + 4)
        << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">" << max_size
        << "</text>\n";
    svg << "  <text x=\"" << (left - 8) << "\" y=\"" << (axis_y + 4)
        << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">0</text>\n";

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SpectrumRow& row = rows[i];
        const int x = left + static_cast<int>(i) * (bar_width + bar_gap) + bar_gap / 2;
        const int bar_height = static_cast<int>(
            (static_cast<double>(row.size) / static_cast<double>(max_size)) * plot_height);
        const int y = axis_y - bar_height;
        const char* fill = row.exact ? "#3182bd" : "url(#lowerbound)";
        if (row.size > 0) {
            svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_width
                << "\" height=\"" << bar_height << "\" fill=\"" << fill
                << "\" stroke=\"#08519c\"/>\n";
        }
        svg << "  <text x=\"" << (x + bar_width / 2) << "\" y=\"" << (axis_y + 16)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" << row.j
            << "</text>\n";
        svg << "  <text x=\"" << (x + bar_width / 2) << "\" y=\"" << (y - 4)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" << row.size
            << "</text>\n";
    }
    svg << "  <text x=\"" << (left + (width - left) / 2) << "\" y=\"" << (height - 8)
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">j"
        << (std::any_of(rows.begin(), rows.end(),
                        [](const SpectrumRow& r) { return !r.exact; })
                ? " (hatched bars are lower bounds)"
                : "")
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

// -------------------------------------------------------------------- files

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path);
    }
    out << content;
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace ordex
