#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmw/inference.hpp"
#include "wmw/pseudomedian.hpp"
#include "wmw/simulation.hpp"

namespace wmw::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3 };

using Json = nlohmann::ordered_json;

Json to_json(const TestResult& r);
Json to_json(const PseudomedianResult& r);
Json to_json(const SimSummary& s);

/// Flat "key: value" rendering of a report, numbers printed exactly as in
/// the JSON form.
std::string render_text(const Json& report);

/// Entry point behind the wmw executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmw::cli
