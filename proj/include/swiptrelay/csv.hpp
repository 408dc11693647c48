#ifndef SWIPTRELAY_CSV_HPP
#define SWIPTRELAY_CSV_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace swiptrelay {

// Shortest exact decimal form of a double ("%.17g" trimmed); reparsing gives
// the identical bits, which is what makes output files byte-reproducible and
// summary CSVs round-trippable.
inline std::string format_double(double v) {
  for (int prec = 15; prec <= 17; ++prec) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v || (v != v && back != back)) return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Minimal comma splitter for re-parsing our own CSV output (no quoting in
// any file we write).
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace swiptrelay

#endif
