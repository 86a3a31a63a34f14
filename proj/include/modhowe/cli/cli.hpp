#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace modhowe::cli {

enum class Format { kJson, kCsv, kMarkdown };

struct RunConfig {
  std::string command;
  std::uint32_t p = 3;
  std::uint32_t e = 1;
  std::uint32_t n = 2;
  std::optional<std::uint64_t> ell;
  bool ordinary = false;
  std::string variety = "Ytilde";
  std::string level = "1";
  std::optional<std::int64_t> a;
  std::string with_u = "both";  // both | yes | no
  bool skip_varieties = false;
  Format format = Format::kJson;
  std::string output;
  unsigned workers = 1;
  std::uint64_t budget = 4'000'000'000ULL;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv, runs the selected subcommand and returns its exit code.
/// Output goes to `out` unless --output names a file; relative output paths
/// are resolved against $MODHOWE_OUTPUT_DIR when it is set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace modhowe::cli
