#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace ek::parse {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Real expression built from numbers and "pi" with * and /, e.g. "pi/2", "2*pi/3", "0.7".
template <class T = long double>
inline T real_expr(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::ParseError, "empty number");
  std::size_t i = 0;
  auto factor = [&]() -> T {
    if (s.compare(i, 2, "pi") == 0) {
      i += 2;
      return pi_v<T>;
    }
    const char* start = s.c_str() + i;
    char* end = nullptr;
    long double v = std::strtold(start, &end);
    if (end == start) fail(ErrorKind::ParseError, "cannot read a number in '" + text + "'");
    i += static_cast<std::size_t>(end - start);
    return T(v);
  };
  T v = factor();
  while (i < s.size()) {
    char op = s[i++];
    if (op != '*' && op != '/') fail(ErrorKind::ParseError, "unexpected '" + std::string(1, op) + "' in '" + text + "'");
    T w = factor();
    if (op == '*') {
      v *= w;
    } else {
      if (w == 0) fail(ErrorKind::ParseError, "division by zero in '" + text + "'");
      v /= w;
    }
  }
  return v;
}

template <class T = long double>
inline Vec3<T> triple(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) fail(ErrorKind::ParseError, "expected three comma-separated values in '" + text + "'");
  return {real_expr<T>(parts[0]), real_expr<T>(parts[1]), real_expr<T>(parts[2])};
}

// Three vertex triples, either as separate arguments or one ';'-separated string.
template <class T = long double>
inline std::array<Vec3<T>, 3> vertices(const std::vector<std::string>& args) {
  std::vector<std::string> items;
  for (auto& a : args)
    for (auto& p : split(a, ';'))
      if (!p.empty()) items.push_back(p);
  if (items.size() != 3) fail(ErrorKind::ParseError, "expected three vertices");
  return {triple<T>(items[0]), triple<T>(items[1]), triple<T>(items[2])};
}

}  // namespace ek::parse
