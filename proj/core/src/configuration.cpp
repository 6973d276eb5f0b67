#include "gnslab/configuration.hpp"

#include <algorithm>
#include <random>

#include "gnslab/error.hpp"
#include "gnslab/random.hpp"

namespace gnslab {

const char* to_string(Boundary boundary) noexcept {
  return boundary == Boundary::Periodic ? "periodic" : "fixed";
}

Configuration::Configuration(std::vector<Symbol> cells, int symbols, Boundary boundary, Symbol background_symbol)
    : cells_(std::move(cells)), symbols_(symbols), boundary_(boundary), background_(background_symbol) {
  if (symbols_ < 2 || symbols_ > kMaxSymbols) {
    fail(ErrorKind::Validation, "symbol count k=" + std::to_string(symbols_) + " is out of range");
  }
  if (cells_.empty()) fail(ErrorKind::Size, "configuration width must be >= 1");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] >= symbols_) {
      fail(ErrorKind::Data, "cell " + std::to_string(i) + " holds symbol " + std::to_string(cells_[i]) +
                                " >= k=" + std::to_string(symbols_));
    }
  }
  if (background_ >= symbols_) {
    fail(ErrorKind::Data, "background symbol " + std::to_string(background_) + " >= k=" + std::to_string(symbols_));
  }
}

Configuration Configuration::with_cells(std::vector<Symbol> cells) const {
  return Configuration(std::move(cells), symbols_, boundary_, background_);
}

SpaceTimeHistory::SpaceTimeHistory(std::vector<Configuration> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) fail(ErrorKind::Size, "history needs at least one row");
  const auto& first = rows_.front();
  for (std::size_t t = 1; t < rows_.size(); ++t) {
    const auto& row = rows_[t];
    if (row.width() != first.width() || row.symbols() != first.symbols() || row.boundary() != first.boundary()) {
      fail(ErrorKind::Shape, "history row " + std::to_string(t) + " differs in width, k or boundary from row 0");
    }
  }
}

std::vector<Symbol> BackgroundSpec::fill(std::size_t width, int symbols) const {
  std::vector<Symbol> cells(width, 0);
  switch (kind) {
    case Kind::Uniform:
      if (symbol >= symbols) fail(ErrorKind::Validation, "background symbol " + std::to_string(symbol) + " >= k");
      std::fill(cells.begin(), cells.end(), symbol);
      break;
    case Kind::Periodic:
      if (pattern.empty()) fail(ErrorKind::Validation, "periodic background needs a non-empty pattern");
      for (Symbol s : pattern) {
        if (s >= symbols) fail(ErrorKind::Validation, "background pattern symbol " + std::to_string(s) + " >= k");
      }
      for (std::size_t i = 0; i < width; ++i) cells[i] = pattern[i % pattern.size()];
      break;
    case Kind::Random: {
      std::mt19937_64 engine(seed);
      for (auto& c : cells) c = static_cast<Symbol>(uniform_below(engine, static_cast<std::uint64_t>(symbols)));
      break;
    }
  }
  return cells;
}

Configuration build_initial(std::size_t width, const BackgroundSpec& background,
                            std::span<const ProcessSpec> processes, int symbols, Boundary boundary) {
  if (width == 0) fail(ErrorKind::Size, "tape width must be >= 1");
  auto cells = background.fill(width, symbols);

  for (const auto& p : processes) {
    if (p.pattern.empty()) fail(ErrorKind::Validation, "process '" + p.label + "' has an empty pattern");
    if (p.placement_offset < 0 ||
        static_cast<std::uint64_t>(p.placement_offset) + p.pattern.size() > width) {
      fail(ErrorKind::Range, "process '" + p.label + "' at offset " + std::to_string(p.placement_offset) +
                                 " with length " + std::to_string(p.pattern.size()) +
                                 " does not fit in width " + std::to_string(width));
    }
  }
  for (std::size_t i = 0; i < processes.size(); ++i) {
    for (std::size_t j = i + 1; j < processes.size(); ++j) {
      const auto& a = processes[i];
      const auto& b = processes[j];
      const auto a_end = a.placement_offset + static_cast<std::int64_t>(a.length());
      const auto b_end = b.placement_offset + static_cast<std::int64_t>(b.length());
      if (a.placement_offset < b_end && b.placement_offset < a_end) {
        fail(ErrorKind::Placement, "processes '" + a.label + "' and '" + b.label + "' overlap");
      }
    }
  }
  for (const auto& p : processes) {
    for (std::size_t i = 0; i < p.pattern.size(); ++i) {
      if (p.pattern[i] >= symbols) {
        fail(ErrorKind::Data, "process '" + p.label + "' symbol " + std::to_string(p.pattern[i]) + " >= k");
      }
      cells[static_cast<std::size_t>(p.placement_offset) + i] = p.pattern[i];
    }
  }
  return Configuration(std::move(cells), symbols, boundary, background.edge_symbol());
}

std::vector<Symbol> symbols_from_string(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      out.push_back(static_cast<Symbol>(c - '0'));
    } else if (c >= 'a' && c <= 'z') {
      out.push_back(static_cast<Symbol>(c - 'a' + 10));
    } else {
      fail(ErrorKind::Parse, "invalid symbol character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
  }
  return out;
}

std::string symbols_to_string(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (s >= 36) fail(ErrorKind::UnsupportedAlphabet, "symbol " + std::to_string(s) + " has no single-character form");
    out.push_back(s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10));
  }
  return out;
}

}  // namespace gnslab
