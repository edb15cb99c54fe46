#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace structmat {

// One CLI invocation, already parsed. preorder "-" reads stdin.
struct JobSpec {
  std::string command;  // analyze | lattice | aut | triviality | classify | oracle
  std::string preorder = "";
  std::optional<int> field;
  std::string group;  // group spec string, empty = unset
  long long budget = 1'000'000;
  std::string format = "text";  // text | json
  unsigned long long seed = 1;
  int jobs = 1;
};

struct RunResult {
  int status = 0;  // 0 ok, 1 input error, 2 undecided (budget)
  std::string text;             // rendered text report (or one-line error)
  nlohmann::ordered_json json;  // structured mirror, schema 1
};

// Executes a job; never throws. Deterministic for fixed spec (byte-stable in
// both formats).
RunResult run_command(const JobSpec& spec);

// Final serialized output for the chosen format.
std::string emit_report(const RunResult& r, const std::string& format);

}  // namespace structmat
