#include "rft/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rft/error.hpp"

namespace rft {

namespace {

std::string format_row(double axis, const cplx& v) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.17g\t%.17g\t%.17g\t%.17g\t%.17g\n", axis,
                v.real(), v.imag(), std::abs(v), std::norm(v));
  return buf;
}

}  // namespace

void write_table(const std::string& path, const Table& t) {
  require(t.axis.size() == t.values.size(), ErrorCode::invalid_argument,
          "table axis and values differ in length");
  std::string out = "omega\tre\tim\tabs\tabs2\n";
  for (std::size_t i = 0; i < t.values.size(); ++i)
    out += format_row(t.axis[i], t.values[i]);
  write_file(path, out);
}

void write_signal_table(const std::string& path, const Signal& s) {
  Table t;
  t.axis.reserve(s.size());
  t.values = s.values;
  for (std::size_t i = 0; i < s.size(); ++i) t.axis.push_back(s.axis_at(i));
  write_table(path, t);
}

Table read_table(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::io, "cannot open table " + path);
  std::string header;
  std::getline(in, header);
  require(header.rfind("omega\tre\tim", 0) == 0, ErrorCode::parse,
          path + " is not a result table");

  Table t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double axis = 0.0, re = 0.0, im = 0.0;
    row >> axis >> re >> im;
    require(!row.fail(), ErrorCode::parse, path + " has a malformed row");
    t.axis.push_back(axis);
    t.values.emplace_back(re, im);
  }
  require(!t.values.empty(), ErrorCode::parse, path + " holds no rows");
  return t;
}

TableComparison compare_tables(const Table& a, const Table& b) {
  require(a.values.size() == b.values.size(), ErrorCode::invalid_argument,
          "tables have different row counts");
  TableComparison c;
  c.rows = static_cast<long long>(a.values.size());

  double num = 0.0, den = 0.0;
  double peak_a = -1.0, peak_b = -1.0;
  long long arg_a = 0, arg_b = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = std::abs(a.values[i] - b.values[i]);
    c.max_abs_diff = std::max(c.max_abs_diff, d);
    num += d * d;
    den += std::norm(b.values[i]);
    if (std::abs(a.values[i]) > peak_a) {
      peak_a = std::abs(a.values[i]);
      arg_a = static_cast<long long>(i);
    }
    if (std::abs(b.values[i]) > peak_b) {
      peak_b = std::abs(b.values[i]);
      arg_b = static_cast<long long>(i);
    }
  }
  require(den > 0.0, ErrorCode::invalid_argument,
          "comparison reference table is identically zero");
  c.relative_l2 = std::sqrt(num / den);
  c.peak_location_diff_bins = arg_a - arg_b;
  return c;
}

void write_jsa_map(const std::string& path, const JsaMap& m) {
  std::string out;
  out.reserve(m.values.size() * 48);
  char buf[96];
  for (std::size_t i = 0; i < m.grid.n; ++i) {
    for (std::size_t j = 0; j < m.grid.n; ++j) {
      const cplx& v = m.at(i, j);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
      out += buf;
      out += (j + 1 == m.grid.n) ? '\n' : '\t';
    }
  }
  write_file(path, out);

  std::string axis;
  for (std::size_t i = 0; i < m.grid.n; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", m.omega_c + m.grid.freq_at(i));
    axis += buf;
  }
  write_file(path + ".axis", axis);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), ErrorCode::io, "cannot write " + path);
  out << content;
  require(out.good(), ErrorCode::io, "failed writing " + path);
}

}  // namespace rft
