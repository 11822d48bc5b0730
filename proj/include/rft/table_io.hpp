#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rft/jsa.hpp"
#include "rft/signal.hpp"

namespace rft {

// Frequency-indexed complex table, the on-disk form of every 1-D result.
// Files are TSV with the header line
//   omega re im abs abs2
// and one %.17g row per bin, so values round-trip bit exactly.
struct Table {
  std::vector<double> axis;
  std::vector<cplx> values;
};

void write_table(const std::string& path, const Table& t);
void write_signal_table(const std::string& path, const Signal& s);
Table read_table(const std::string& path);

struct TableComparison {
  double relative_l2 = 0.0;
  double max_abs_diff = 0.0;
  long long peak_location_diff_bins = 0;
  long long rows = 0;
};

// b is the reference of the relative measure.
TableComparison compare_tables(const Table& a, const Table& b);

// Square complex matrix, one "re,im" cell per entry, with the shared axis
// written to "<path>.axis" (one value per line, offset by the carrier).
void write_jsa_map(const std::string& path, const JsaMap& m);

std::uint64_t fnv1a64(std::string_view data);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rft
