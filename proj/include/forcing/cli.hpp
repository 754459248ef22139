#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace forcing::cli {

struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  std::optional<std::string> output_path;
};

constexpr int kOk = 0;
constexpr int kContractViolation = 1;
constexpr int kBadConfig = 2;

std::vector<std::string> command_names();
// Parameter names accepted by a command, with their defaults.
std::map<std::string, std::string> command_defaults(const std::string& command);

// Runs one command and writes its JSON document (one line) to `out`, or to
// output_path when set. Library errors are reported as
// {"error": name, "message": ..., "detail": ...} with exit code 1; unknown
// commands, unknown keys and malformed values give exit code 2.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv ("forcing-lab <command> --key value ... [-o file]") and runs it.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace forcing::cli
