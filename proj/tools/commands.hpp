#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fano/json_io.hpp"

namespace fano::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kInputError = 2 };

struct Options {
  std::string input;
  std::string cubic;
  bool json = false;
  bool timing = false;
  std::optional<std::uint64_t> seed;
  std::size_t count = 50;
  std::string target;
};

struct RunReport {
  io::Json body;
  int exit_code = kPass;
};

RunReport cubic_verify(const Options& opts);
RunReport cubic_cohomology(const Options& opts);
RunReport quintic_verify(const Options& opts);
RunReport quintic_cohomology(const Options& opts);
RunReport quintic_conic(const Options& opts);
RunReport sweep(const Options& opts);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace fano::cli
