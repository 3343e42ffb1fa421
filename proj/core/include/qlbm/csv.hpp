#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

namespace qlbm {

/// Shortest-round-trip is not enough for cross-implementation diffs; every
/// CSV value is written with 17 significant digits.
[[nodiscard]] std::string format_double(double value);

/// Writes through a temporary sibling file and renames it into place, so a
/// reader never observes a partially written file.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& writer);

}  // namespace qlbm
