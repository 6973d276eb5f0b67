#include "gnslab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "gnslab/engine.hpp"
#include "gnslab/error.hpp"
#include "gnslab/random.hpp"

namespace gnslab {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorKind::Validation, std::string(what) + " '" + std::string(text) + "' is not a non-negative integer");
  }
  return value;
}

Symbol parse_symbol(std::string_view text) {
  const auto v = parse_count(text, "symbol");
  if (v >= static_cast<std::uint64_t>(kMaxSymbols)) fail(ErrorKind::Validation, "symbol " + std::string(text) + " too large");
  return static_cast<Symbol>(v);
}

void check_trajectory_pair(const FeatureTrajectory& a, const FeatureTrajectory& b) {
  if (a.measure.kind != b.measure.kind) {
    fail(ErrorKind::Validation, std::string("trajectories use different measures (") + to_string(a.measure.kind) +
                                    " vs " + to_string(b.measure.kind) + ")");
  }
}

std::size_t tail_start(std::size_t steps, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) fail(ErrorKind::Validation, "tail fraction must lie in (0, 1]");
  // ceil((1 - f) T) = T - floor(f T)
  const auto dropped = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(steps)));
  return steps - std::min(dropped, steps);
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2) fail(ErrorKind::Validation, "generator '" + std::string(text) + "' must be kind:length[:params]");
  GeneratorSpec spec;
  spec.length = parse_count(parts[1], "generator length");
  if (spec.length == 0) fail(ErrorKind::Validation, "generator length must be >= 1");
  const auto kind = parts[0];
  const auto arity_error = [&] {
    fail(ErrorKind::Validation, "generator '" + std::string(text) + "' has the wrong number of parameters");
  };
  if (kind == "uniform") {
    if (parts.size() != 3) arity_error();
    spec.kind = Kind::Uniform;
    spec.symbol = parse_symbol(parts[2]);
  } else if (kind == "periodic") {
    if (parts.size() != 3) arity_error();
    spec.kind = Kind::Periodic;
    try {
      spec.pattern = symbols_from_string(parts[2]);
    } catch (const Error& e) {
      fail(ErrorKind::Validation, "generator pattern: " + std::string(e.what()));
    }
    if (spec.pattern.empty() || spec.pattern.size() > spec.length) {
      fail(ErrorKind::Validation, "periodic pattern length must be in [1, " + std::to_string(spec.length) + "]");
    }
  } else if (kind == "random") {
    if (parts.size() != 2) arity_error();
    spec.kind = Kind::Random;
  } else if (kind == "single" || kind == "single-seed") {
    if (parts.size() > 4) arity_error();
    spec.kind = Kind::SingleSeed;
    spec.symbol = parts.size() >= 3 ? parse_symbol(parts[2]) : Symbol{1};
    spec.background = parts.size() >= 4 ? parse_symbol(parts[3]) : Symbol{0};
    if (spec.symbol == spec.background) fail(ErrorKind::Validation, "single-seed symbol must differ from its background");
  } else {
    fail(ErrorKind::Validation, "unknown generator kind '" + std::string(kind) + "'");
  }
  return spec;
}

std::string GeneratorSpec::to_string() const {
  const std::string len = std::to_string(length);
  switch (kind) {
    case Kind::Uniform: return "uniform:" + len + ":" + std::to_string(symbol);
    case Kind::Periodic: return "periodic:" + len + ":" + symbols_to_string(pattern);
    case Kind::Random: return "random:" + len;
    case Kind::SingleSeed:
      return "single:" + len + ":" + std::to_string(symbol) + ":" + std::to_string(background);
  }
  return {};
}

ProcessSpec generate_process(const GeneratorSpec& spec, int symbols, std::uint64_t seed, std::string label) {
  if (spec.length == 0) fail(ErrorKind::Validation, "process length must be >= 1");
  const auto check = [&](Symbol s) {
    if (s >= symbols) fail(ErrorKind::Validation, "generator symbol " + std::to_string(s) + " >= k=" + std::to_string(symbols));
  };
  std::vector<Symbol> pattern(spec.length);
  switch (spec.kind) {
    case GeneratorSpec::Kind::Uniform:
      check(spec.symbol);
      std::fill(pattern.begin(), pattern.end(), spec.symbol);
      break;
    case GeneratorSpec::Kind::Periodic:
      if (spec.pattern.empty() || spec.pattern.size() > spec.length) {
        fail(ErrorKind::Validation, "periodic pattern must be non-empty and no longer than the process");
      }
      for (Symbol s : spec.pattern) check(s);
      for (std::size_t i = 0; i < spec.length; ++i) pattern[i] = spec.pattern[i % spec.pattern.size()];
      break;
    case GeneratorSpec::Kind::Random: {
      std::mt19937_64 engine(seed);
      for (auto& s : pattern) s = static_cast<Symbol>(uniform_below(engine, static_cast<std::uint64_t>(symbols)));
      break;
    }
    case GeneratorSpec::Kind::SingleSeed:
      check(spec.symbol);
      check(spec.background);
      if (spec.symbol == spec.background) fail(ErrorKind::Validation, "single-seed symbol equals its background");
      std::fill(pattern.begin(), pattern.end(), spec.background);
      pattern[spec.length / 2] = spec.symbol;
      break;
  }
  return ProcessSpec{std::move(label), std::move(pattern), 0};
}

void ExperimentConfig::validate() const {
  if (width == 0) fail(ErrorKind::Validation, "width must be >= 1");
  if (steps < 1) fail(ErrorKind::Validation, "steps must be >= 1");
  measure.validate();
  if (measure.symbols != rule.symbols()) {
    fail(ErrorKind::Validation, "measure alphabet k=" + std::to_string(measure.symbols) + " differs from rule k=" +
                                    std::to_string(rule.symbols()));
  }
  tail_start(steps, tail_fraction);
}

bool satisfies_no_wrap(const ExperimentConfig& cfg, std::size_t total_segment_length) {
  return cfg.width > 2 * static_cast<std::size_t>(cfg.rule.radius()) * cfg.steps + total_segment_length;
}

ProcessSpec centered(ProcessSpec p, std::size_t width) {
  if (p.length() > width) {
    fail(ErrorKind::Range, "process '" + p.label + "' of length " + std::to_string(p.length()) +
                               " does not fit in width " + std::to_string(width));
  }
  p.placement_offset = static_cast<std::int64_t>((width - p.length()) / 2);
  return p;
}

WindowSpec process_window(const ProcessSpec& p, const ExperimentConfig& cfg) {
  const auto start = static_cast<std::size_t>(std::max<std::int64_t>(p.placement_offset, 0));
  return WindowSpec{start, start + p.length(), cfg.window, static_cast<std::size_t>(cfg.rule.radius())};
}

FeatureTrajectory run_solo(const ProcessSpec& p, const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.require_no_wrap && !satisfies_no_wrap(cfg, p.length())) {
    fail(ErrorKind::Validation, "width " + std::to_string(cfg.width) + " violates W > 2rT + segments");
  }
  const ProcessSpec procs[] = {p};
  const auto initial = build_initial(cfg.width, cfg.background, procs, cfg.rule.symbols(), cfg.boundary);
  const auto history = evolve(initial, cfg.rule, cfg.steps);
  return feature_series(history, process_window(p, cfg), cfg.measure);
}

CollisionLayout collision_layout(const ProcessSpec& a, const ProcessSpec& b, std::size_t gap, std::size_t width) {
  const std::size_t total = a.length() + gap + b.length();
  if (total > width) {
    fail(ErrorKind::Placement, "processes '" + a.label + "' and '" + b.label + "' with gap " + std::to_string(gap) +
                                   " need " + std::to_string(total) + " cells but the tape has " +
                                   std::to_string(width));
  }
  CollisionLayout layout{a, b};
  layout.a.placement_offset = static_cast<std::int64_t>((width - total) / 2);
  layout.b.placement_offset = layout.a.placement_offset + static_cast<std::int64_t>(a.length() + gap);
  return layout;
}

CollisionResult run_collision(const ProcessSpec& a, const ProcessSpec& b, std::size_t gap,
                              const ExperimentConfig& cfg) {
  cfg.validate();
  auto layout = collision_layout(a, b, gap, cfg.width);
  if (cfg.require_no_wrap && !satisfies_no_wrap(cfg, a.length() + gap + b.length())) {
    fail(ErrorKind::Validation, "width " + std::to_string(cfg.width) + " violates W > 2rT + segments");
  }
  const ProcessSpec procs[] = {layout.a, layout.b};
  const auto initial = build_initial(cfg.width, cfg.background, procs, cfg.rule.symbols(), cfg.boundary);
  auto history = evolve(initial, cfg.rule, cfg.steps);
  auto traj_a = feature_series(history, process_window(layout.a, cfg), cfg.measure);
  auto traj_b = feature_series(history, process_window(layout.b, cfg), cfg.measure);
  return CollisionResult{std::move(layout), std::move(traj_a), std::move(traj_b), std::move(history)};
}

double persistence_score(const FeatureTrajectory& solo, const FeatureTrajectory& joint) {
  if (solo.values.size() != joint.values.size()) {
    fail(ErrorKind::Shape, "trajectory lengths differ (" + std::to_string(solo.values.size()) + " vs " +
                               std::to_string(joint.values.size()) + ")");
  }
  check_trajectory_pair(solo, joint);
  double deviation = 0.0;
  double scale = 0.0;
  for (std::size_t t = 0; t < solo.values.size(); ++t) {
    deviation += std::abs(solo.values[t] - joint.values[t]);
    scale += std::max(std::abs(solo.values[t]), std::abs(joint.values[t]));
  }
  return std::clamp(1.0 - deviation / (scale + kPersistenceEpsilon), 0.0, 1.0);
}

double tail_mean(const FeatureTrajectory& trajectory, double fraction) {
  if (trajectory.values.empty()) fail(ErrorKind::Size, "empty trajectory");
  const std::size_t steps = trajectory.values.size() - 1;
  const std::size_t start = tail_start(steps, fraction);
  double sum = 0.0;
  for (std::size_t t = start; t <= steps; ++t) sum += trajectory.values[t];
  return sum / static_cast<double>(steps - start + 1);
}

const char* to_string(Rank rank) noexcept {
  switch (rank) {
    case Rank::AHigher: return "A_higher";
    case Rank::BHigher: return "B_higher";
    case Rank::Equal: return "equal";
  }
  return "?";
}

Rank complexity_rank(const FeatureTrajectory& solo_a, const FeatureTrajectory& solo_b, double fraction) {
  check_trajectory_pair(solo_a, solo_b);
  const double diff = tail_mean(solo_a, fraction) - tail_mean(solo_b, fraction);
  if (std::abs(diff) <= kRankTolerance) return Rank::Equal;
  return diff > 0 ? Rank::AHigher : Rank::BHigher;
}

const char* to_string(Behavior behavior) noexcept {
  switch (behavior) {
    case Behavior::Simple: return "Simple";
    case Behavior::Intermediate: return "Intermediate";
    case Behavior::Complex: return "Complex";
  }
  return "?";
}

double classification_scale(const MeasureSpec& measure) {
  switch (measure.kind) {
    case MeasureKind::Lz78Normalized:
      return 1.0;
    case MeasureKind::BlockEntropy:
      if (measure.block == 0 || measure.symbols < 2) fail(ErrorKind::Validation, "entropy measure lacks block or k");
      return 1.0 / (static_cast<double>(measure.block) * std::log2(static_cast<double>(measure.symbols)));
    default:
      fail(ErrorKind::Validation, std::string("cannot classify trajectories of measure ") + to_string(measure.kind) +
                                      "; use lz78n or entropy");
  }
}

Behavior classify_behavior(const FeatureTrajectory& trajectory, Thresholds thresholds, double fraction) {
  if (!(thresholds.simple < thresholds.complex)) {
    fail(ErrorKind::Validation, "classification thresholds must satisfy simple < complex");
  }
  const double mean = tail_mean(trajectory, fraction) * classification_scale(trajectory.measure);
  if (mean < thresholds.simple) return Behavior::Simple;
  if (mean > thresholds.complex) return Behavior::Complex;
  return Behavior::Intermediate;
}

const char* to_string(Winner winner) noexcept {
  switch (winner) {
    case Winner::A: return "A";
    case Winner::B: return "B";
    case Winner::Tie: return "tie";
  }
  return "?";
}

std::optional<double> SurvivalReport::abidance_probability() const {
  const std::size_t decided = n_trials() - ties;
  if (decided == 0) return std::nullopt;
  return static_cast<double>(wins_higher) / static_cast<double>(decided);
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial, const GeneratorSpec& generator_a,
                      const GeneratorSpec& generator_b, std::size_t gap) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.seed, trial);
  const int k = cfg.rule.symbols();
  const auto a = generate_process(generator_a, k, derive_seed(rec.seed, 0), "A");
  const auto b = generate_process(generator_b, k, derive_seed(rec.seed, 1), "B");

  const auto joint = run_collision(a, b, gap, cfg);
  // Solo controls sit exactly where each process sits in the joint run.
  const auto solo_a = run_solo(joint.layout.a, cfg);
  const auto solo_b = run_solo(joint.layout.b, cfg);

  rec.solo_complexity_a = tail_mean(solo_a, cfg.tail_fraction);
  rec.solo_complexity_b = tail_mean(solo_b, cfg.tail_fraction);
  rec.rank = complexity_rank(solo_a, solo_b, cfg.tail_fraction);
  rec.persistence_a = persistence_score(solo_a, joint.a);
  rec.persistence_b = persistence_score(solo_b, joint.b);

  const double diff = rec.persistence_a - rec.persistence_b;
  rec.winner = std::abs(diff) <= kTieTolerance ? Winner::Tie : (diff > 0 ? Winner::A : Winner::B);
  rec.rank_agrees = (rec.winner == Winner::A && rec.rank == Rank::AHigher) ||
                    (rec.winner == Winner::B && rec.rank == Rank::BHigher);
  return rec;
}

SurvivalReport gns_sweep(const ExperimentConfig& cfg, std::size_t n_trials, const GeneratorSpec& generator_a,
                         const GeneratorSpec& generator_b, std::size_t gap, SweepOptions options) {
  if (n_trials == 0) fail(ErrorKind::Validation, "a sweep needs at least one trial");
  cfg.validate();

  std::vector<TrialRecord> records(n_trials);
  std::vector<std::exception_ptr> errors(n_trials);

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_trials));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < n_trials && !failed; i = next++) {
      try {
        records[i] = run_trial(cfg, i, generator_a, generator_b, gap);
      } catch (...) {
        errors[i] = std::current_exception();
        failed = true;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < n_trials; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "trial " + std::to_string(i) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorKind::Data, "trial " + std::to_string(i) + ": " + e.what());
    }
  }

  SurvivalReport report{cfg, generator_a, generator_b, gap, std::move(records), 0, 0, 0};
  for (const auto& rec : report.records) {
    if (rec.winner == Winner::Tie || rec.rank == Rank::Equal) {
      ++report.ties;
    } else if (rec.rank_agrees) {
      ++report.wins_higher;
    } else {
      ++report.wins_lower;
    }
  }
  return report;
}

}  // namespace gnslab
