#include "gnslab/complexity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "gnslab/error.hpp"

namespace gnslab {

namespace {

double entropy_from_counts(std::vector<std::size_t>& counts, std::size_t total) {
  if (counts.size() <= 1) return 0.0;
  // Fixed summation order makes the result depend only on the multiset of
  // counts, hence invariant under symbol relabeling.
  std::sort(counts.begin(), counts.end());
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (std::size_t c : counts) {
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

std::size_t alphabet_of(std::span<const Symbol> s) {
  return static_cast<std::size_t>(*std::max_element(s.begin(), s.end())) + 1;
}

}  // namespace

double block_entropy(std::span<const Symbol> s, std::size_t block) {
  if (block == 0) fail(ErrorKind::Size, "block length must be >= 1");
  if (s.empty()) fail(ErrorKind::Size, "entropy of an empty string is undefined");
  if (s.size() < block) {
    fail(ErrorKind::Size, "string length " + std::to_string(s.size()) + " is shorter than block length " +
                              std::to_string(block));
  }
  const std::size_t total = s.size() - block + 1;
  std::vector<std::size_t> counts;

  const std::size_t k = std::max<std::size_t>(alphabet_of(s), 2);
  const double bits = static_cast<double>(block) * std::log2(static_cast<double>(k));
  if (bits < 63.0) {
    // Blocks fit in a machine word: roll their base-k values, sort, count runs.
    std::uint64_t high = 1;
    for (std::size_t i = 1; i < block; ++i) high *= k;
    std::vector<std::uint64_t> keys;
    keys.reserve(total);
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i >= block) value %= high;
      value = value * k + s[i];
      if (i + 1 >= block) keys.push_back(value);
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      counts.push_back(j - i);
      i = j;
    }
  } else {
    std::map<std::vector<Symbol>, std::size_t> tally;
    for (std::size_t i = 0; i < total; ++i) ++tally[std::vector<Symbol>(s.begin() + i, s.begin() + i + block)];
    for (const auto& [key, c] : tally) counts.push_back(c);
  }
  return entropy_from_counts(counts, total);
}

std::size_t lz78_phrase_count(std::span<const Symbol> s) {
  if (s.empty()) fail(ErrorKind::Size, "LZ78 parse of an empty string is undefined");
  const std::size_t k = alphabet_of(s);
  std::size_t phrases = 0;
  std::uint32_t node = 0;
  std::uint32_t next_id = 1;

  if ((s.size() + 1) * k <= (std::size_t{1} << 24)) {
    // Dictionary trie as a dense child table; node 0 is the empty phrase.
    std::vector<std::uint32_t> children((s.size() + 1) * k, 0);
    for (Symbol c : s) {
      auto& child = children[node * k + c];
      if (child != 0) {
        node = child;
      } else {
        child = next_id++;
        ++phrases;
        node = 0;
      }
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint32_t> children;
    for (Symbol c : s) {
      const std::uint64_t key = static_cast<std::uint64_t>(node) * k + c;
      auto it = children.find(key);
      if (it != children.end()) {
        node = it->second;
      } else {
        children.emplace(key, next_id++);
        ++phrases;
        node = 0;
      }
    }
  }
  if (node != 0) ++phrases;
  return phrases;
}

double lz78_normalized(std::span<const Symbol> s, int symbols) {
  if (symbols < 2) fail(ErrorKind::Validation, "alphabet size must be >= 2");
  if (s.size() < 2) fail(ErrorKind::Size, "normalized LZ78 needs a string of length >= 2");
  const double c = static_cast<double>(lz78_phrase_count(s));
  return c * (std::log(c) / std::log(static_cast<double>(symbols)) + 1.0) / static_cast<double>(s.size());
}

CtmTable parse_ctm_table(std::string_view text, int symbols) {
  CtmTable table;
  table.symbols = symbols;
  std::size_t line_no = 0;
  auto line_error = [&](const std::string& what) {
    fail(ErrorKind::Parse, "CTM table line " + std::to_string(line_no) + ": " + what);
  };

  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::vector<std::string_view> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) line_error("expected '<block> <value>'");

    std::vector<Symbol> block;
    try {
      block = symbols_from_string(tokens[0]);
    } catch (const Error&) {
      line_error("block '" + std::string(tokens[0]) + "' is not a symbol string");
    }
    for (Symbol s : block) {
      if (s >= symbols) line_error("block '" + std::string(tokens[0]) + "' uses a symbol >= k=" + std::to_string(symbols));
    }
    if (table.block_length == 0) {
      table.block_length = block.size();
    } else if (block.size() != table.block_length) {
      line_error("block length " + std::to_string(block.size()) + " differs from earlier length " +
                 std::to_string(table.block_length));
    }

    double value = 0.0;
    const auto* first = tokens[1].data();
    const auto* last = first + tokens[1].size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) line_error("value '" + std::string(tokens[1]) + "' is not a number");
    if (!std::isfinite(value) || value < 0.0) line_error("value must be finite and >= 0");

    if (!table.entries.emplace(std::move(block), value).second) {
      line_error("duplicate block '" + std::string(tokens[0]) + "'");
    }
  }
  if (table.entries.empty()) fail(ErrorKind::Parse, "CTM table has no entries");
  return table;
}

double bdm(std::span<const Symbol> s, const CtmTable& table) {
  const std::size_t m = table.block_length;
  if (m == 0) fail(ErrorKind::Validation, "CTM table has no block length");
  if (s.size() < m) {
    fail(ErrorKind::Size, "string length " + std::to_string(s.size()) + " is shorter than block length " +
                              std::to_string(m));
  }
  std::map<std::vector<Symbol>, std::size_t> blocks;
  for (std::size_t i = 0; i + m <= s.size(); i += m) ++blocks[std::vector<Symbol>(s.begin() + i, s.begin() + i + m)];

  std::string missing;
  double total = 0.0;
  for (const auto& [block, count] : blocks) {
    auto it = table.entries.find(block);
    if (it == table.entries.end()) {
      if (!missing.empty()) missing += ", ";
      missing += symbols_to_string(block);
      continue;
    }
    total += it->second + std::log2(static_cast<double>(count));
  }
  if (!missing.empty()) fail(ErrorKind::Coverage, "CTM table lacks blocks: " + missing);
  return total;
}

const char* to_string(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::BlockEntropy: return "entropy";
    case MeasureKind::Lz78: return "lz78";
    case MeasureKind::Lz78Normalized: return "lz78n";
    case MeasureKind::Bdm: return "bdm";
  }
  return "?";
}

MeasureSpec MeasureSpec::entropy(std::size_t block, int symbols) {
  return {MeasureKind::BlockEntropy, block, nullptr, symbols};
}
MeasureSpec MeasureSpec::lz78(int symbols) { return {MeasureKind::Lz78, 0, nullptr, symbols}; }
MeasureSpec MeasureSpec::lz78n(int symbols) { return {MeasureKind::Lz78Normalized, 0, nullptr, symbols}; }
MeasureSpec MeasureSpec::block_decomposition(std::shared_ptr<const CtmTable> table) {
  const int k = table ? table->symbols : 2;
  return {MeasureKind::Bdm, 0, std::move(table), k};
}

void MeasureSpec::validate() const {
  if (symbols < 2) fail(ErrorKind::Validation, "measure alphabet size must be >= 2");
  switch (kind) {
    case MeasureKind::BlockEntropy:
      if (block == 0) fail(ErrorKind::Validation, "entropy measure needs a block length >= 1");
      if (table) fail(ErrorKind::Validation, "entropy measure takes no CTM table");
      break;
    case MeasureKind::Lz78:
    case MeasureKind::Lz78Normalized:
      if (block != 0 || table) fail(ErrorKind::Validation, "LZ78 measures take no block length or CTM table");
      break;
    case MeasureKind::Bdm:
      if (!table) fail(ErrorKind::Validation, "bdm measure needs a CTM table");
      if (block != 0) fail(ErrorKind::Validation, "bdm block length comes from the CTM table");
      break;
  }
}

std::size_t MeasureSpec::min_length() const {
  switch (kind) {
    case MeasureKind::BlockEntropy: return block;
    case MeasureKind::Lz78: return 1;
    case MeasureKind::Lz78Normalized: return 2;
    case MeasureKind::Bdm: return table ? table->block_length : 1;
  }
  return 1;
}

double MeasureSpec::evaluate(std::span<const Symbol> s) const {
  switch (kind) {
    case MeasureKind::BlockEntropy: return block_entropy(s, block);
    case MeasureKind::Lz78: return static_cast<double>(lz78_phrase_count(s));
    case MeasureKind::Lz78Normalized: return lz78_normalized(s, symbols);
    case MeasureKind::Bdm: return bdm(s, *table);
  }
  return 0.0;
}

const char* to_string(WindowMode mode) noexcept { return mode == WindowMode::Fixed ? "fixed" : "lightcone"; }

WindowSpec::Interval WindowSpec::at_step(std::size_t t, std::size_t width) const {
  if (mode == WindowMode::Fixed) return {start, std::min(end, width)};
  const std::size_t grow = growth * t;
  return {start > grow ? start - grow : 0, std::min(width, end + grow)};
}

FeatureTrajectory feature_series(const SpaceTimeHistory& history, const WindowSpec& window,
                                 const MeasureSpec& measure) {
  measure.validate();
  FeatureTrajectory out{measure, window, {}};
  out.values.reserve(history.row_count());
  const std::size_t need = measure.min_length();
  for (std::size_t t = 0; t < history.row_count(); ++t) {
    const auto [lo, hi] = window.at_step(t, history.width());
    if (lo >= hi || hi - lo < need) {
      fail(ErrorKind::Size, "window [" + std::to_string(lo) + ", " + std::to_string(hi) + ") at step " +
                                std::to_string(t) + " is shorter than the " + std::to_string(need) +
                                " cells the measure needs");
    }
    const auto cells = history.row(t).cells().subspan(lo, hi - lo);
    out.values.push_back(measure.evaluate(cells));
  }
  return out;
}

}  // namespace gnslab
