#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "matsing/determinacy.hpp"

namespace matsing {

using Json = nlohmann::ordered_json;

// A validated computation request: ring, matrix and/or ideal inputs, group,
// task, options.  Built from the JSON session document or assembled by the
// command-line front end.
struct Session {
    RingPtr ring;
    std::optional<PolyMatrix> matrix;
    GroupSpec group{GroupBase::CGlr, false};
    std::string task = "verdict";

    // task options
    std::optional<int> j;
    std::optional<int> rank;
    DerivationSet ders = DerivationSet::full();
    std::optional<std::vector<Polynomial>> ideal_gens;
    std::optional<std::vector<Polynomial>> by_gens;
    std::uint32_t jet_degree = 0;  // 0 = automatic
    std::uint32_t power_bound = 16;
    std::uint64_t seed = 42;
    std::uint32_t cases = 25;
};

// Parses and validates a session document; diagnostics name the offending
// field (e.g. "matrix[1][0]: ...").
Session parse_session(const Json& doc);
Session parse_session_text(const std::string& text);

struct RunResult {
    Json report;
    int exit_code;  // 0 computed, 2 not-finitely-determined, 3 budget exceeded
};

// Executes the task and produces the canonical report.  Ideals are printed
// as sorted monic reduced standard bases; identical sessions give
// byte-identical reports apart from the timing field.
RunResult run(const Session& s);

Json ideal_to_json(const Ideal& I);
Json report_to_json(const DeterminacyReport& rep);

}  // namespace matsing
