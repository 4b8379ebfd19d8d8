#pragma once

// Human-readable rendering of carrier values used in law witnesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixcat {

inline std::string describe(int x) { return std::to_string(x); }
inline std::string describe(const std::string& s) { return s; }

template <class A, class B>
std::string describe(const std::pair<A, B>& p);
template <class X>
std::string describe(const std::optional<X>& x);
template <class X>
std::string describe(const std::vector<X>& xs);

template <class A, class B>
std::string describe(const std::pair<A, B>& p) {
  return "(" + describe(p.first) + "," + describe(p.second) + ")";
}

template <class X>
std::string describe(const std::optional<X>& x) {
  return x ? describe(*x) : std::string("bottom");
}

template <class X>
std::string describe(const std::vector<X>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ", ";
    out += describe(xs[i]);
  }
  return out + "]";
}

}  // namespace mixcat
