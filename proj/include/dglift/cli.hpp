// Batch front end. Every command reads an inputs document
//
//   {"signature": {...}, "module": {...}, "params": {"var": ..., "bound": ...}}
//
// (a problem file has the same shape) and produces a transcript
//
//   {"command", "inputs", "digest", "verdict", "checks", "result", "timing_ms"}.
//
// Exit codes: 0 pass, 1 input error, 2 verification failure, 3 inconclusive.
#ifndef DGLIFT_CLI_HPP
#define DGLIFT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dglift/io.hpp"

namespace dglift::cli {

enum ExitCode { kPass = 0, kInputError = 1, kFailure = 2, kInconclusive = 3 };

/// Runs one command on an inputs document and returns
/// {"verdict", "checks", "result"}. Deterministic; throws io::InputError
/// (or another exception) on bad input.
io::json execute(const std::string& command, const io::json& inputs);

int exit_code_for(const std::string& verdict);

/// Parses argv-style arguments (without the program name) and runs the
/// command, printing the transcript to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dglift::cli

#endif  // DGLIFT_CLI_HPP
