#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "didp/set.hpp"

namespace didp {

// Values of all state variables, grouped by kind. The position of a variable
// inside its group is fixed by the model's metadata.
struct State {
  std::vector<Set> sets;
  std::vector<std::int64_t> elements;
  std::vector<std::int64_t> integers;
  std::vector<double> reals;

  friend bool operator==(const State&, const State&) = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; h ^= h >> 31; };
    for (const auto& s : sets) mix(s.hash());
    for (auto e : elements) mix(std::hash<std::int64_t>()(e));
    for (auto i : integers) mix(std::hash<std::int64_t>()(i));
    for (auto r : reals) mix(std::hash<double>()(r));
    return h;
  }
};

struct StateHash {
  std::size_t operator()(const State& s) const { return s.hash(); }
};

}  // namespace didp
