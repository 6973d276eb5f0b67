#pragma once

#include <string>
#include <string_view>

namespace gnslab {

/// Whole file as bytes; i/o error if it cannot be read.
std::string read_file(const std::string& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view bytes);

}  // namespace gnslab
