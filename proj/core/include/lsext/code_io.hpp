#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lsext/code.hpp"

// Plain-text generator matrices:
//
//   # optional comment lines
//   q k n
//   k rows of n space-separated element codes
//
// Blank lines and lines starting with '#' are ignored anywhere.

namespace lsext {

/// Throws ParseError (with the offending line number) on a malformed header,
/// a bad or out-of-range symbol, a wrong row count or length, or a rank
/// deficient matrix.
LinearCode parse_code(std::istream& in);
LinearCode parse_code_string(const std::string& text);
LinearCode read_code_file(const std::filesystem::path& path);

/// Header and rows only, one trailing newline; stable byte for byte.
std::string serialize_code(const LinearCode& code);
void write_code_file(const std::filesystem::path& path, const LinearCode& code);

}  // namespace lsext
