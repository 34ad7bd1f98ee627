#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hfitt {

inline constexpr const char* kVersion = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input = 2;
inline constexpr int budget = 3;
inline constexpr int invariant = 4;
}  // namespace exit_code

enum class ReportFormat { Json, Text };

struct JobOptions {
  /// Groebner step budget per computation; library default when absent.
  std::optional<std::size_t> budget;
  std::uint64_t seed = 0;
  /// Adds wall-clock timings, which makes reports non-reproducible.
  bool timing = false;
  ReportFormat format = ReportFormat::Json;
};

struct JobResult {
  std::string report;
  int exit_code = exit_code::ok;
};

/// Runs a job document (JSON text). Document-level problems give exit code 2
/// and a report carrying only the error; per-task math errors are embedded in
/// that task's result.
JobResult run_job(std::string_view document, const JobOptions& options = {});

}  // namespace hfitt
