#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ranklab/rational.hpp"

namespace ranklab {

// One experiment per row. Exact quantities hold "p/q" text, Monte Carlo
// ones a real with 12 significant digits; see format_real.
struct ExperimentRow {
  std::string instance_id;
  std::size_t n = 0;
  std::string mode;  // "exact" or "mc"
  std::string expected_size;
  std::string ratio;
  std::string bound;
  std::string verdict;  // "pass", "fail" or "vacuous"
  std::uint64_t seed = 0;
  double runtime_ms = 0;
};

inline constexpr const char* kCsvHeader = "instance_id,n,mode,expected_size,ratio,bound,verdict,seed,runtime_ms";

std::string format_real(double x);

// Quotes a field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ExperimentRow& row);
void write_csv(std::ostream& os, const std::vector<ExperimentRow>& rows);

}  // namespace ranklab
