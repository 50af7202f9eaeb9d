#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace quadlie::cli {

enum class Format { Json, Latex, Summary };

/// Everything a command needs; filled from argv and QUADLIE_FORMAT.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  Format format = Format::Json;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::string lambda = "1";
};

/// Runs one invocation and returns the exit code: 0 when every requested
/// check passes, 1 when a check fails, 2 for usage or input errors. Failures
/// also write a JSON object to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace quadlie::cli
