#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ikernel/recognizer.hpp"

namespace ikernel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

struct ManifestEntry {
  std::string label;
  std::filesystem::path path;
};

/// One "<label> <path>" pair per line; blank lines and '#' comments are
/// skipped. Relative paths resolve against the manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Loads every manifest entry as a template. Labels must be unique and each
/// file must hold a template kernel.
std::vector<LabeledTemplate> load_templates(const std::filesystem::path& manifest);

/// Runs one command line (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ikernel::cli
