#pragma once

#include <random>
#include <vector>

#include "gnslab/configuration.hpp"

namespace testing {

inline std::vector<int> as_ints(std::span<const gnslab::Symbol> s) { return {s.begin(), s.end()}; }

inline std::vector<gnslab::Symbol> random_symbols(std::mt19937_64& rng, std::size_t n, int k) {
  std::vector<gnslab::Symbol> out(n);
  for (auto& s : out) s = static_cast<gnslab::Symbol>(rng() % static_cast<std::uint64_t>(k));
  return out;
}

inline gnslab::Configuration tape(std::string_view digits, gnslab::Boundary b = gnslab::Boundary::Fixed,
                                  int k = 2, gnslab::Symbol background = 0) {
  return gnslab::Configuration(gnslab::symbols_from_string(digits), k, b, background);
}

inline gnslab::Configuration single_seed(std::size_t width, std::size_t at, gnslab::Boundary b) {
  std::vector<gnslab::Symbol> cells(width, 0);
  cells[at] = 1;
  return gnslab::Configuration(std::move(cells), 2, b, 0);
}

}  // namespace testing
