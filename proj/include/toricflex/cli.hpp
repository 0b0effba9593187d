#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricflex::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidFan = 1,
  kUsage = 2,
  kHypothesisFailed = 3,
  kVerificationFailed = 4,
};

enum class Command { Validate, Analyze, Cover, Verify, Example, Subdivide };

struct CliConfig {
  Command command = Command::Validate;
  std::string input = "-";   // "-" is standard input
  std::string output = "-";  // "-" is standard output
  std::string certificate;   // verify only
  std::string name;          // example only
  std::vector<long> params;  // example only
  std::string cone;          // subdivide: comma-separated ray indices
  bool verbose = false;
};

/// Runs one command. Payloads go to out, diagnostics to err.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors exit with kUsage.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toricflex::cli
