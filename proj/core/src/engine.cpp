#include "gnslab/engine.hpp"

#include <string>
#include <vector>

#include "gnslab/error.hpp"

namespace gnslab {

namespace {

// Updates `in` into `out` using `halo` as scratch. The halo holds the row
// padded by r cells on each side so the neighborhood value can be rolled
// along the row: v' = (v mod k^(2r)) * k + next.
void advance(std::span<const Symbol> in, std::span<Symbol> out, std::vector<Symbol>& halo, const RuleTable& table,
             Boundary boundary, Symbol background) {
  const std::size_t width = in.size();
  const auto r = static_cast<std::size_t>(table.radius());
  const auto k = static_cast<std::size_t>(table.symbols());
  const std::size_t span = 2 * r + 1;

  halo.resize(width + 2 * r);
  for (std::size_t j = 0; j < r; ++j) {
    // Cell index -r + j on the left, width + j on the right.
    if (boundary == Boundary::Periodic) {
      halo[j] = in[(width - (r - j) % width) % width];
      halo[r + width + j] = in[j % width];
    } else {
      halo[j] = background;
      halo[r + width + j] = background;
    }
  }
  std::copy(in.begin(), in.end(), halo.begin() + static_cast<std::ptrdiff_t>(r));

  const auto lookup = table.lookup();
  const std::size_t high = lookup.size() / k;  // k^(2r)
  std::size_t value = 0;
  for (std::size_t j = 0; j + 1 < span; ++j) value = value * k + halo[j];
  for (std::size_t i = 0; i < width; ++i) {
    value = (value % high) * k + halo[i + span - 1];
    out[i] = lookup[value];
  }
}

void check_symbols(const Configuration& config, const RuleTable& table) {
  const auto cells = config.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] >= table.symbols()) {
      fail(ErrorKind::Data, "cell " + std::to_string(i) + " holds symbol " + std::to_string(cells[i]) +
                                " but the rule has k=" + std::to_string(table.symbols()));
    }
  }
  if (config.boundary() == Boundary::Fixed && config.background_symbol() >= table.symbols()) {
    fail(ErrorKind::Data, "background symbol " + std::to_string(config.background_symbol()) +
                              " but the rule has k=" + std::to_string(table.symbols()));
  }
}

}  // namespace

Configuration step(const Configuration& config, const RuleTable& table) {
  check_symbols(config, table);
  std::vector<Symbol> next(config.width());
  std::vector<Symbol> halo;
  advance(config.cells(), next, halo, table, config.boundary(), config.background_symbol());
  return config.with_cells(std::move(next));
}

SpaceTimeHistory evolve(const Configuration& initial, const RuleTable& table, std::size_t steps) {
  check_symbols(initial, table);
  std::vector<Configuration> rows;
  rows.reserve(steps + 1);
  rows.push_back(initial);
  std::vector<Symbol> halo;
  for (std::size_t t = 0; t < steps; ++t) {
    std::vector<Symbol> next(initial.width());
    advance(rows.back().cells(), next, halo, table, initial.boundary(), initial.background_symbol());
    rows.push_back(initial.with_cells(std::move(next)));
  }
  return SpaceTimeHistory(std::move(rows));
}

}  // namespace gnslab
