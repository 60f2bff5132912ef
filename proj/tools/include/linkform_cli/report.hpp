#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkform/checks.hpp"
#include "linkform/cohomology.hpp"

namespace linkform::cli {

inline constexpr const char* tool_version = "0.1.0";

using Json = nlohmann::ordered_json;

struct ReportOptions {
    int n_max = 3;
    std::vector<std::string> sections; // empty: every section valid for the dimension
    std::uint64_t seed = 0;
};

struct Outcome {
    Json doc;
    bool passed = true;
};

const std::vector<std::string>& section_names();

// Report document for the requested sections. Throws ParityError when a
// requested section does not apply to the dimension.
Outcome build_report(const Space& space, const ReportOptions& opt);

// Runs a verification suite and summarizes it.
Outcome build_verify(const Space& space, const std::string& suite, std::uint64_t seed, const SuiteOptions& opt);

// Human-readable label of a class in terms of the group generators: "0",
// "1", "g2", "g2_1 + 3*g2_2".
std::string label(const CohomologyClass& x, const Space& space);

} // namespace linkform::cli
