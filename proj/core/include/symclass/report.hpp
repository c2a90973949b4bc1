#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symclass/path.hpp"

namespace symclass {

using Json = nlohmann::ordered_json;

/// Parsed input file: either a triple (A, B, C), a full matrix M to be
/// split into blocks, or a one-parameter family of triples; plus settings.
struct InputDocument {
    int schema = 1;
    int n = 0;  // 1 or 2 when a single class is given
    std::optional<WonenburgerTriple> triple;
    std::vector<std::pair<double, WonenburgerTriple>> family;
    double tol = 1e-9;
    bool tol_from_file = false;
    int k_max = 6;
    Quotient quotient = Quotient::SpI;
    std::string hash;  // FNV-1a of the raw input bytes
};

/// Parses and validates a JSON input document. Malformed JSON raises
/// nlohmann's parse_error; schema and structure problems raise
/// symclass::Error subclasses.
InputDocument parse_input(const std::string& raw_bytes);
InputDocument load_input(const std::string& path);

/// Full classification of a single class: every module's answer about one
/// triple, with fields omitted where undefined (e.g. no B-types over N).
Json classify_report(const InputDocument& in);

/// Normal-form-only view of the same data.
Json normal_form_report(const InputDocument& in);

/// Family analysis: serialized PathReport plus the events table.
struct FamilyOutput {
    Json document;
    std::string table;  // fixed-width events table with verdict line
    std::string csv;    // param, tau, delta, label per sample
};
FamilyOutput family_report(const InputDocument& in);

/// Round-trip helpers used by the CLI and tests.
Json path_report_to_json(const PathReport& report, Quotient q);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace symclass
