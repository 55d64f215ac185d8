#pragma once
// Shared enumeration helpers for the property-based suites.

#include <functional>
#include <vector>

#include "pretzel/code.hpp"

namespace pretzel_tests {

// Every code with min_r <= r <= max_r and 1 <= |n_i| <= max_twist, in
// lexicographic order.
inline void for_each_code(int min_r, int max_r, int max_twist,
                          const std::function<void(const pretzel::PretzelCode&)>& fn) {
  std::vector<int> values;
  for (int v = -max_twist; v <= max_twist; ++v)
    if (v != 0) values.push_back(v);
  for (int r = min_r; r <= max_r; ++r) {
    std::vector<size_t> idx(r, 0);
    for (;;) {
      std::vector<int> tangles(r);
      for (int i = 0; i < r; ++i) tangles[i] = values[idx[i]];
      fn(pretzel::PretzelCode(std::move(tangles)));
      int i = r - 1;
      while (i >= 0 && ++idx[i] == values.size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
}

inline void for_each_knot(int min_r, int max_r, int max_twist,
                          const std::function<void(const pretzel::PretzelCode&)>& fn) {
  for_each_code(min_r, max_r, max_twist, [&](const pretzel::PretzelCode& code) {
    if (pretzel::component_count(code) == 1) fn(code);
  });
}

}  // namespace pretzel_tests
