#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gnslab/rule_table.hpp"

namespace gnslab {

enum class Boundary { Periodic, Fixed };

const char* to_string(Boundary boundary) noexcept;

/// One row of a finite tape. Cells beyond the edges are either the opposite
/// edge (periodic) or `background_symbol` (fixed).
class Configuration {
 public:
  Configuration(std::vector<Symbol> cells, int symbols, Boundary boundary = Boundary::Periodic,
                Symbol background_symbol = 0);

  std::size_t width() const noexcept { return cells_.size(); }
  int symbols() const noexcept { return symbols_; }
  Boundary boundary() const noexcept { return boundary_; }
  Symbol background_symbol() const noexcept { return background_; }
  std::span<const Symbol> cells() const noexcept { return cells_; }
  Symbol operator[](std::size_t i) const { return cells_[i]; }

  /// Same metadata, new cells (validated).
  Configuration with_cells(std::vector<Symbol> cells) const;

  bool operator==(const Configuration&) const = default;

 private:
  std::vector<Symbol> cells_;
  int symbols_;
  Boundary boundary_;
  Symbol background_;
};

/// Rows of an evolution, row 0 being the initial condition.
class SpaceTimeHistory {
 public:
  explicit SpaceTimeHistory(std::vector<Configuration> rows);

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t steps() const noexcept { return rows_.size() - 1; }
  std::size_t width() const noexcept { return rows_.front().width(); }
  int symbols() const noexcept { return rows_.front().symbols(); }
  const Configuration& row(std::size_t t) const { return rows_.at(t); }
  const std::vector<Configuration>& rows() const noexcept { return rows_; }

  bool operator==(const SpaceTimeHistory&) const = default;

 private:
  std::vector<Configuration> rows_;
};

/// A process: a labeled initial-condition segment placed on the tape.
struct ProcessSpec {
  std::string label;
  std::vector<Symbol> pattern;
  std::int64_t placement_offset = 0;

  std::size_t length() const noexcept { return pattern.size(); }
  bool operator==(const ProcessSpec&) const = default;
};

/// How the tape is filled before processes are spliced in.
struct BackgroundSpec {
  enum class Kind { Uniform, Periodic, Random };

  Kind kind = Kind::Uniform;
  Symbol symbol = 0;             // Uniform
  std::vector<Symbol> pattern;   // Periodic
  std::uint64_t seed = 0;        // Random

  static BackgroundSpec uniform(Symbol s) { return {Kind::Uniform, s, {}, 0}; }
  static BackgroundSpec periodic(std::vector<Symbol> p) { return {Kind::Periodic, 0, std::move(p), 0}; }
  static BackgroundSpec random(std::uint64_t seed) { return {Kind::Random, 0, {}, seed}; }

  /// Symbol read beyond the edges in fixed-boundary mode: the uniform
  /// symbol, otherwise 0.
  Symbol edge_symbol() const noexcept { return kind == Kind::Uniform ? symbol : Symbol{0}; }

  /// Background content of cells [0, width).
  std::vector<Symbol> fill(std::size_t width, int symbols) const;

  bool operator==(const BackgroundSpec&) const = default;
};

/// Background fill overwritten by each process pattern at its offset.
/// Throws a range error for segments outside [0, width) and a placement
/// error naming both labels for overlapping segments.
Configuration build_initial(std::size_t width, const BackgroundSpec& background,
                            std::span<const ProcessSpec> processes, int symbols, Boundary boundary);

/// Parses a digit string such as "0110" into symbols (0-9 then a-z).
std::vector<Symbol> symbols_from_string(std::string_view text);
std::string symbols_to_string(std::span<const Symbol> symbols);

}  // namespace gnslab
