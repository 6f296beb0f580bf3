#ifndef QCFP_TRACE_IO_HPP
#define QCFP_TRACE_IO_HPP

#include <cstddef>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcfp/errors.hpp"
#include "qcfp/solver.hpp"

namespace qcfp {

// One CSV row. Rows with index_i < m carry the pre-projection point y^i
// and f_value = f_{i+1}(y^i); the summary row (index_i = m) carries the
// sweep exit point with residual and, when a reference is set, its
// distance. Applying the matching projection to a non-summary row's point
// reproduces the next row's point.
struct TraceRow {
  std::size_t sweep = 0;
  std::size_t index_i = 0;
  std::vector<double> coords;
  std::optional<double> f_value;
  std::optional<double> residual;
  std::optional<double> dist_to_reference;
};

namespace detail {

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline std::string format_opt(const std::optional<double>& v) {
  return v ? format_g17(*v) : std::string();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

inline double parse_csv_double(const std::string& field, std::size_t lineno) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &consumed);
  } catch (const std::exception&) {
    throw ParseError("trace line " + std::to_string(lineno) +
                     ": not a number: '" + field + "'");
  }
  if (consumed != field.size()) {
    throw ParseError("trace line " + std::to_string(lineno) +
                     ": trailing characters in '" + field + "'");
  }
  return v;
}

inline std::size_t parse_csv_index(const std::string& field,
                                   std::size_t lineno) {
  std::size_t consumed = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(field, &consumed);
  } catch (const std::exception&) {
    throw ParseError("trace line " + std::to_string(lineno) +
                     ": not an index: '" + field + "'");
  }
  if (consumed != field.size()) {
    throw ParseError("trace line " + std::to_string(lineno) +
                     ": trailing characters in '" + field + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace detail

// Emits the CSV trace: header, then per sweep one row per inner step
// followed by the summary row. Values print with %.17g so a reader
// recovers every double bit-exactly. Requires records with inner
// recording on.
inline void write_trace(const std::vector<SweepRecord>& trace,
                        std::size_t dimension, std::ostream& out) {
  out << "sweep,index_i";
  for (std::size_t i = 1; i <= dimension; ++i) {
    out << ",x" << i;
  }
  out << ",f_value,residual,dist_to_reference\n";
  for (const SweepRecord& rec : trace) {
    if (rec.inner.size() != rec.values.size() + 1 || rec.inner.empty()) {
      throw InvalidArgument(
          "trace export requires sweeps recorded with inner points");
    }
    for (std::size_t i = 0; i < rec.inner.size(); ++i) {
      const Point& p = rec.inner[i];
      if (p.dim() != dimension) {
        throw DimensionMismatch("trace point dimension mismatch");
      }
      out << rec.sweep_index << ',' << i;
      for (std::size_t a = 0; a < dimension; ++a) {
        out << ',' << detail::format_g17(p[a]);
      }
      const bool summary = i + 1 == rec.inner.size();
      if (summary) {
        out << ",," << detail::format_g17(rec.residual) << ','
            << detail::format_opt(rec.dist_to_reference);
      } else {
        out << ',' << detail::format_g17(rec.values[i]) << ",,";
      }
      out << '\n';
    }
  }
}

inline void save_trace(const std::vector<SweepRecord>& trace,
                       std::size_t dimension, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write trace file '" + path + "'");
  }
  write_trace(trace, dimension, out);
}

inline std::vector<TraceRow> read_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("trace file is empty");
  }
  const std::vector<std::string> header = detail::split_csv_line(line);
  if (header.size() < 6 || header[0] != "sweep" || header[1] != "index_i" ||
      header[header.size() - 3] != "f_value" ||
      header[header.size() - 2] != "residual" ||
      header.back() != "dist_to_reference") {
    throw ParseError("trace header malformed");
  }
  const std::size_t dimension = header.size() - 5;
  for (std::size_t i = 0; i < dimension; ++i) {
    if (header[2 + i] != "x" + std::to_string(i + 1)) {
      throw ParseError("trace header malformed at coordinate column " +
                       std::to_string(i + 1));
    }
  }
  std::vector<TraceRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ParseError("trace line " + std::to_string(lineno) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    TraceRow row;
    row.sweep = detail::parse_csv_index(fields[0], lineno);
    row.index_i = detail::parse_csv_index(fields[1], lineno);
    row.coords.reserve(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
      row.coords.push_back(detail::parse_csv_double(fields[2 + i], lineno));
    }
    const auto opt = [&](const std::string& f) -> std::optional<double> {
      if (f.empty()) {
        return std::nullopt;
      }
      return detail::parse_csv_double(f, lineno);
    };
    row.f_value = opt(fields[2 + dimension]);
    row.residual = opt(fields[3 + dimension]);
    row.dist_to_reference = opt(fields[4 + dimension]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<TraceRow> load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open trace file '" + path + "'");
  }
  return read_trace(in);
}

}  // namespace qcfp

#endif  // QCFP_TRACE_IO_HPP
