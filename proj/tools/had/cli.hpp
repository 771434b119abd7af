#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "had/variety.hpp"

namespace had::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  ///< DEFECT, EMPTY, or a result other than the one requested
inline constexpr int kExitUsage = 2;

/// Directory holding the shipped `.var` files; $HAD_CATALOGUE overrides the build-time default.
std::filesystem::path catalogue_dir();

/// Resolves "catalogue:NAME" or a file path to a variety description.
VarietySpec resolve_variety(const std::string& ref);

/// Runs one command. `args` excludes the program name. The human table goes
/// to `out`, diagnostics to `err`; with --json PATH the machine-readable
/// report is written to PATH.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace had::cli
