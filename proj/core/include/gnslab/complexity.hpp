#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "gnslab/configuration.hpp"

namespace gnslab {

/// Shannon entropy (bits) of the empirical distribution of the |s|-m+1
/// overlapping length-m substrings of `s`.
double block_entropy(std::span<const Symbol> s, std::size_t block);

/// Number of phrases in the LZ78 incremental dictionary parse of `s`. The
/// final phrase may repeat a dictionary entry.
std::size_t lz78_phrase_count(std::span<const Symbol> s);

/// c * (log_k(c) + 1) / |s| with c the LZ78 phrase count. Near 1 for
/// incompressible strings, tends to 0 for constant ones.
double lz78_normalized(std::span<const Symbol> s, int symbols);

/// Coding-theorem values for every length-m block over a k-symbol alphabet.
struct CtmTable {
  std::size_t block_length = 0;
  int symbols = 2;
  std::map<std::vector<Symbol>, double> entries;
};

/// Line-oriented "<block> <value>" text; '#' starts a comment and blank
/// lines are skipped. Errors carry the offending line number.
CtmTable parse_ctm_table(std::string_view text, int symbols);

/// Block decomposition: sum over distinct non-overlapping length-m blocks b
/// of CTM(b) + log2(multiplicity of b). A trailing partial block is dropped.
double bdm(std::span<const Symbol> s, const CtmTable& table);

enum class MeasureKind { BlockEntropy, Lz78, Lz78Normalized, Bdm };

const char* to_string(MeasureKind kind) noexcept;

struct MeasureSpec {
  MeasureKind kind = MeasureKind::Lz78Normalized;
  std::size_t block = 0;                  // BlockEntropy only
  std::shared_ptr<const CtmTable> table;  // Bdm only
  int symbols = 2;                        // alphabet for normalization

  static MeasureSpec entropy(std::size_t block, int symbols = 2);
  static MeasureSpec lz78(int symbols = 2);
  static MeasureSpec lz78n(int symbols = 2);
  static MeasureSpec block_decomposition(std::shared_ptr<const CtmTable> table);

  /// Throws a validation error if parameters do not match the kind.
  void validate() const;

  /// Shortest string the measure accepts.
  std::size_t min_length() const;

  double evaluate(std::span<const Symbol> s) const;
};

enum class WindowMode { Fixed, LightCone };

const char* to_string(WindowMode mode) noexcept;

/// Tracked cells [start, end). In light-cone mode the interval widens by
/// `growth` cells per side per step and is clipped to the tape.
struct WindowSpec {
  std::size_t start = 0;
  std::size_t end = 0;
  WindowMode mode = WindowMode::LightCone;
  std::size_t growth = 1;

  struct Interval {
    std::size_t start;
    std::size_t end;
  };

  Interval at_step(std::size_t t, std::size_t width) const;
};

struct FeatureTrajectory {
  MeasureSpec measure;
  WindowSpec window;
  std::vector<double> values;
};

/// Measure applied to the window of every history row.
FeatureTrajectory feature_series(const SpaceTimeHistory& history, const WindowSpec& window,
                                 const MeasureSpec& measure);

}  // namespace gnslab
