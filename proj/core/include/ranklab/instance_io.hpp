#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ranklab/error.hpp"
#include "ranklab/ranking.hpp"

namespace ranklab {

// Instance file format (UTF-8, one record per line):
//
//   # comment                      anywhere; '#' starts a comment to end of line
//   offline v1 v2 v3               ranking order, first record
//   online u1 u2                   arrival order, second record
//   edge u1 v1                     online endpoint first, repeated
//
// Blank lines are ignored. serialize_instance writes the canonical form:
// no comments, edges ordered by arrival index, then by offline index.

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

BipartiteInstance parse_instance(std::string_view text);
std::string serialize_instance(const BipartiteInstance& inst);

BipartiteInstance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const BipartiteInstance& inst);

// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string fingerprint(const BipartiteInstance& inst);

// Matching edges listed in arrival order, one "edge <online> <offline>"
// line each, followed by size and the unmatched vertices of both parties.
std::string format_matching(const BipartiteInstance& inst, const Matching& m);

}  // namespace ranklab
