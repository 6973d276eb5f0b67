#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gnslab/complexity.hpp"
#include "gnslab/configuration.hpp"
#include "gnslab/harness.hpp"
#include "gnslab/rule_table.hpp"

namespace gnslab {

/// Flat key=value experiment description.
///
///   rule, k, r, width, steps      rule 110 is "rule=110" (k=2, r=1 default)
///   boundary   periodic | fixed
///   background uniform:<sym> | periodic:<pattern> | random:<seed>
///   measure    entropy | lz78 | lz78n | bdm
///   block      entropy block length (default 8)
///   ctm_table  path of a CTM table file (bdm)
///   window     fixed | lightcone
///   seed, trials, gap
///   proc_a, proc_b   generator specs, see GeneratorSpec
///   thresholds <simple>,<complex>
struct LabConfig {
  RuleNumber rule = 0;
  int k = 2;
  int r = 1;
  std::size_t width = 0;
  std::size_t steps = 0;
  Boundary boundary = Boundary::Periodic;
  BackgroundSpec background = BackgroundSpec::uniform(0);
  MeasureKind measure = MeasureKind::Lz78Normalized;
  std::optional<std::size_t> block;
  std::optional<std::string> ctm_table;
  WindowMode window = WindowMode::LightCone;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> gap;
  std::optional<GeneratorSpec> proc_a;
  std::optional<GeneratorSpec> proc_b;
  Thresholds thresholds;

  bool operator==(const LabConfig&) const = default;
};

inline constexpr std::size_t kDefaultEntropyBlock = 8;

/// Parses `text`, then applies `overrides` ("key=value", later wins).
/// Unknown keys, malformed values and missing rule/width/steps raise parse
/// or validation errors carrying the line number and key.
LabConfig parse_config(std::string_view text, std::span<const std::string> overrides = {});

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const LabConfig& config);

/// Throws a parse error naming the first key `subcommand` needs but lacks.
void require_keys(const LabConfig& config, std::string_view subcommand);

/// Decodes the rule and loads the CTM table (if any) from disk.
ExperimentConfig to_experiment(const LabConfig& config);

}  // namespace gnslab
