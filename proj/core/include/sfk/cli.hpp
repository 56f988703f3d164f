#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sfk/json_io.hpp"

namespace sfk::cli {

/// A validated request. `command` is the dispatch head (group, cocycle, h2,
/// ext, seifert, heis, invariants, polyrep), `verb` the subaction, `payload`
/// the parsed JSON document, and the options steer seeded verification.
struct CommandRequest {
  std::string command;
  std::string verb;
  json payload;
  std::uint64_t seed = 0;
  int box = 3;
  int samples = 100;
  int verbosity = 0;
  std::string symbol_text;  // invariants / group presentation
  long p = 1;               // heis
  std::string group_spec;   // h2: "cyclic:n" or "abelian:m1xm2"
  std::string module_spec;  // h2: "trivial-Z" | "sign-Z" | "trivial-Zn:m"
  int degree = 2;           // h2
  SymbolBounds bounds;      // invariants enumerate
};

/// Exit codes: 0 success, 1 a mathematical check failed (witness in the
/// report), 2 unknown command or malformed payload, 3 internal inconsistency.
struct ParseResult {
  int exit_code = 0;
  std::string diagnostic;
  std::vector<CommandRequest> requests;  // empty on error / --help
  bool help = false;
  std::string help_text;
};

ParseResult parse_request(const std::vector<std::string>& argv, std::istream& stdin_stream);

struct RunResult {
  int exit_code = 0;
  json report;
};

RunResult run(const CommandRequest& req, std::ostream& stream_out);

/// Full entry point used by the binary: parse, run, print.
int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sfk::cli
