#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace fundom::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json cmd_poincare(int n1, int n2, const std::string& mode);
/// regions: "" (plain list), "triangle", "v" or "ak".
Json cmd_fixed_points(int n1, int n2, const std::string& regions);
Json cmd_series(int order);
Json cmd_vertices(const std::vector<int>& n);
Json cmd_classify(const std::vector<int>& n, const std::vector<int>& mu);

std::string render_json(const Json& doc);
/// Flat table for the command's main list; UsageError if the command has none.
std::string render_csv(const Json& doc);

/// Full command line without the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fundom::cli
