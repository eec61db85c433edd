#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace gls {

// Thrown for malformed or inconsistent input files; the CLI maps it to its
// own exit code, distinct from internal assertion failures.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits round-trips every finite double exactly.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline double parse_double(const std::string& tok, const std::string& context) {
  try {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad number '" + tok + "' in " + context);
  }
}

inline long parse_long(const std::string& tok, const std::string& context) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + tok + "' in " + context);
  }
}

}  // namespace gls
