#pragma once

// BaseFamily: an ordered collection of subsets of {1..n}, the candidate (or
// certified) base for a subset action. Whether sizes must equal r or only
// stay below it is carried by the ActionSpec a family is checked against.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace subsetbase {

struct BaseFamily {
  std::int64_t n = 0;
  std::vector<std::vector<int>> sets;  // sorted members, construction order
};

inline void validate(const BaseFamily& b) {
  if (b.n < 1) throw std::domain_error("base family: n must be positive");
  for (const auto& s : b.sets) {
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::domain_error("base family: sets must be strictly increasing");
    if (!s.empty() && (s.front() < 1 || s.back() > b.n))
      throw std::domain_error("base family: member out of range 1..n");
  }
}

/// Per-point sorted list of 1-based indices of the member sets containing it.
inline std::vector<std::vector<int>> point_neighborhoods(const BaseFamily& b) {
  std::vector<std::vector<int>> nbs(static_cast<std::size_t>(b.n));
  for (std::size_t j = 0; j < b.sets.size(); ++j)
    for (int x : b.sets[j])
      nbs[static_cast<std::size_t>(x - 1)].push_back(static_cast<int>(j + 1));
  return nbs;
}

}  // namespace subsetbase
