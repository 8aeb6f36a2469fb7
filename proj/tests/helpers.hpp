#pragma once

#include "cubuland/error.hpp"
#include "cubuland/planar.hpp"
#include "cubuland/wallspace.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace testing_support {

using namespace cubuland;

inline Rational q(const char* text) { return parse_rational(text); }

inline LineEntry line(long long a, long long b, const char* c, int mult = 1) {
  return LineEntry{make_line(a, b, q(c)), mult};
}

inline Wall planar_wall(long long a, long long b, const char* c) {
  return Wall{0, 0, HalfplanePair{make_line(a, b, q(c))}};
}

/// p vertical lines x = 0..p-1 and q horizontal lines y = 0..q-1.
inline Wallspace grid(int p, int qn) {
  std::vector<LineEntry> lines;
  for (int i = 0; i < p; ++i) lines.push_back(line(1, 0, std::to_string(i).c_str()));
  for (int j = 0; j < qn; ++j) lines.push_back(line(0, 1, std::to_string(j).c_str()));
  return Wallspace::planar(lines);
}

inline Point point(const char* x, const char* y) { return Point{q(x), q(y)}; }

inline Window window(const char* x0, const char* y0, const char* x1, const char* y1) {
  return Window{q(x0), q(y0), q(x1), q(y1)};
}

inline Lattice lattice(long long u0, long long u1, long long w0, long long w1) {
  return Lattice{{Integer(u0), Integer(u1)}, {Integer(w0), Integer(w1)}};
}

template <typename F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace testing_support
