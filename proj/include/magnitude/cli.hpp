#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "magnitude/error.hpp"
#include "magnitude/io.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

struct JobSpec {
  /// validate, mh, tor, ext, crosscheck, ring, relations, inv, coinv or gen.
  std::string command;
  std::filesystem::path input;
  /// Detected from the file when unset. For `gen`, the kind of instance to produce.
  std::optional<InputKind> kind;
  int n_max = 3;
  Grade l_max = 3;
  /// "Z", "Q" or "Fp:P"; empty picks Z for homology and Q for cohomology.
  std::string field;
  std::string format = "table";
  /// Distance-module coefficients; the file may omit "space" to use the input's.
  std::optional<std::filesystem::path> coefficients;
  std::uint64_t seed = 0;
  /// Number of points for `gen`.
  std::size_t points = 4;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
  /// Machine-readable error JSON when exit_code ≠ 0 because of a failure.
  std::string error;
};

/// Never throws: every library error becomes exit code 2 with an error JSON.
/// A crosscheck mismatch or an invalid module under `validate` exits with 1.
RunResult run(const JobSpec& job);

Json error_json(const Error& error);

}  // namespace magnitude
