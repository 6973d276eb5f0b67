#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnslab/complexity.hpp"
#include "gnslab/configuration.hpp"
#include "gnslab/rule_table.hpp"

namespace gnslab {

/// Recipe for a process segment, written "kind:length[:params]":
///   uniform:<len>:<symbol>
///   periodic:<len>:<pattern>
///   random:<len>
///   single:<len>[:<symbol>[:<background>]]
struct GeneratorSpec {
  enum class Kind { Uniform, Periodic, Random, SingleSeed };

  Kind kind = Kind::Uniform;
  std::size_t length = 1;
  Symbol symbol = 0;            // Uniform fill, or the SingleSeed cell
  std::vector<Symbol> pattern;  // Periodic
  Symbol background = 0;        // SingleSeed surroundings

  static GeneratorSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const GeneratorSpec&) const = default;
};

/// Deterministic in (spec, symbols, seed); only `random` consumes the seed.
ProcessSpec generate_process(const GeneratorSpec& spec, int symbols, std::uint64_t seed, std::string label = {});

struct ExperimentConfig {
  explicit ExperimentConfig(RuleTable table) : rule(std::move(table)) {}

  RuleTable rule;
  std::size_t width = 1024;
  std::size_t steps = 512;
  Boundary boundary = Boundary::Periodic;
  BackgroundSpec background;
  MeasureSpec measure;
  WindowMode window = WindowMode::LightCone;
  std::uint64_t seed = 0;
  /// Fraction of the trajectory (from the end) averaged into summaries.
  double tail_fraction = 0.25;
  /// Reject layouts where light cones could wrap around the tape.
  bool require_no_wrap = false;

  void validate() const;
};

/// W > 2 r T + total segment length: no light cone can reach around the
/// tape within T steps.
bool satisfies_no_wrap(const ExperimentConfig& cfg, std::size_t total_segment_length);

/// Copy of `p` placed in the middle of a tape of `width` cells.
ProcessSpec centered(ProcessSpec p, std::size_t width);

/// Tracking window of a placed process under `cfg`.
WindowSpec process_window(const ProcessSpec& p, const ExperimentConfig& cfg);

/// Evolves `p` alone (at its own offset) and measures its window.
FeatureTrajectory run_solo(const ProcessSpec& p, const ExperimentConfig& cfg);

struct CollisionLayout {
  ProcessSpec a;
  ProcessSpec b;
};

/// a, `gap` background cells, then b, centered as a block.
CollisionLayout collision_layout(const ProcessSpec& a, const ProcessSpec& b, std::size_t gap, std::size_t width);

struct CollisionResult {
  CollisionLayout layout;
  FeatureTrajectory a;
  FeatureTrajectory b;
  SpaceTimeHistory history;
};

CollisionResult run_collision(const ProcessSpec& a, const ProcessSpec& b, std::size_t gap,
                              const ExperimentConfig& cfg);

inline constexpr double kPersistenceEpsilon = 1e-12;
inline constexpr double kRankTolerance = 1e-9;
inline constexpr double kTieTolerance = 1e-9;

/// 1 - sum|solo - joint| / (sum max(|solo|, |joint|) + eps), clamped to [0, 1].
double persistence_score(const FeatureTrajectory& solo, const FeatureTrajectory& joint);

/// Mean over steps ceil((1 - fraction) T) .. T.
double tail_mean(const FeatureTrajectory& trajectory, double fraction = 0.25);

enum class Rank { AHigher, BHigher, Equal };

const char* to_string(Rank rank) noexcept;

Rank complexity_rank(const FeatureTrajectory& solo_a, const FeatureTrajectory& solo_b, double fraction = 0.25);

enum class Behavior { Simple, Intermediate, Complex };

const char* to_string(Behavior behavior) noexcept;

struct Thresholds {
  double simple = 0.15;
  double complex = 0.5;

  bool operator==(const Thresholds&) const = default;
};

/// Factor that maps a measure onto the [0, 1]-ish scale the thresholds use:
/// 1 for lz78n, 1 / (m log2 k) for block entropy. Other measures are
/// rejected with a validation error.
double classification_scale(const MeasureSpec& measure);

/// Thresholds the scaled tail mean: below `simple` is Simple, above
/// `complex` is Complex.
Behavior classify_behavior(const FeatureTrajectory& trajectory, Thresholds thresholds = {},
                           double fraction = 0.25);

enum class Winner { A, B, Tie };

const char* to_string(Winner winner) noexcept;

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double solo_complexity_a = 0.0;
  double solo_complexity_b = 0.0;
  double persistence_a = 0.0;
  double persistence_b = 0.0;
  Winner winner = Winner::Tie;
  Rank rank = Rank::Equal;
  bool rank_agrees = false;

  bool operator==(const TrialRecord&) const = default;
};

struct SurvivalReport {
  ExperimentConfig config;
  GeneratorSpec generator_a;
  GeneratorSpec generator_b;
  std::size_t gap = 0;
  std::vector<TrialRecord> records;
  std::size_t wins_higher = 0;
  std::size_t wins_lower = 0;
  /// Persistence ties plus trials whose solo complexities are equal.
  std::size_t ties = 0;

  std::size_t n_trials() const noexcept { return records.size(); }

  /// wins_higher / (n_trials - ties); empty when every trial tied.
  std::optional<double> abidance_probability() const;
};

struct SweepOptions {
  /// 0 uses std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Runs one solo/solo/collision trial.
TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial, const GeneratorSpec& generator_a,
                      const GeneratorSpec& generator_b, std::size_t gap);

/// Monte-Carlo estimate of how often the process with the higher solo
/// complexity keeps the higher persistence. Records are ordered by trial
/// index and do not depend on the thread count.
SurvivalReport gns_sweep(const ExperimentConfig& cfg, std::size_t n_trials, const GeneratorSpec& generator_a,
                         const GeneratorSpec& generator_b, std::size_t gap, SweepOptions options = {});

}  // namespace gnslab
