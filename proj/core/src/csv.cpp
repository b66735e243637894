#include "ranklab/csv.hpp"

#include <cstdio>

namespace ranklab {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const ExperimentRow& row) {
  os << csv_field(row.instance_id) << ',' << row.n << ',' << row.mode << ',' << row.expected_size << ','
     << row.ratio << ',' << row.bound << ',' << row.verdict << ',' << row.seed << ',' << format_real(row.runtime_ms)
     << '\n';
}

void write_csv(std::ostream& os, const std::vector<ExperimentRow>& rows) {
  write_csv_header(os);
  for (const auto& r : rows) write_csv_row(os, r);
}

}  // namespace ranklab
