#pragma once

// The sequence monad: unit is the one-element list, multiplication
// concatenates. It is not commutative, which makes it the negative control
// for the double-strength check.

#include <vector>

namespace mixcat::testing {

struct ListMonad {
  template <class X>
  std::vector<X> unit(const X& x) const {
    return {x};
  }
  template <class X>
  std::vector<X> mult(const std::vector<std::vector<X>>& xss) const {
    std::vector<X> out;
    for (const auto& xs : xss) out.insert(out.end(), xs.begin(), xs.end());
    return out;
  }
  template <class F, class X>
  auto map(F&& f, const std::vector<X>& xs) const {
    std::vector<decltype(f(xs.front()))> out;
    for (const auto& x : xs) out.push_back(f(x));
    return out;
  }
};

}  // namespace mixcat::testing
