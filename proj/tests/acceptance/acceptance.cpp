// Acceptance suite: one line per criterion, each with its tolerance and
// wall-clock budget pinned below. Exit status is non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "gnslab/complexity.hpp"
#include "gnslab/engine.hpp"
#include "gnslab/harness.hpp"
#include "gnslab/render.hpp"
#include "gnslab/report_csv.hpp"

using namespace gnslab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<int> ints(std::span<const Symbol> s) { return {s.begin(), s.end()}; }

std::vector<Symbol> random_cells(std::mt19937_64& rng, std::size_t n, int k) {
  std::vector<Symbol> out(n);
  for (auto& s : out) s = static_cast<Symbol>(rng() % static_cast<std::uint64_t>(k));
  return out;
}

ExperimentConfig rule110(std::size_t width, std::size_t steps, std::uint64_t seed = 0) {
  ExperimentConfig cfg(decode_rule(110, 2, 1));
  cfg.width = width;
  cfg.steps = steps;
  cfg.seed = seed;
  cfg.measure = MeasureSpec::lz78n(2);
  cfg.window = WindowMode::LightCone;
  return cfg;
}

Outcome rule_decoding() {
  Outcome o;
  const auto t = decode_rule(110, 2, 1);
  const std::vector<Symbol> white_between_blacks{1, 0, 1};
  o.require(t.output(white_between_blacks) == 1, "rule 110 maps (1,0,1) to 0");
  o.require(t.outputs() == std::vector<Symbol>{0, 1, 1, 0, 1, 1, 1, 0}, "rule 110 table differs from 01101110");
  for (unsigned n = 0; n < 256; ++n) {
    o.require(encode_rule(decode_rule(n, 2, 1)) == n, "round trip failed for rule " + std::to_string(n));
  }
  o.detail = o.pass ? "(1,0,1)->1; 256/256 elementary rules round-trip" : o.detail;
  return o;
}

Outcome single_seed_wedge() {
  Outcome o;
  constexpr std::size_t W = 1600;
  constexpr std::size_t T = 700;
  constexpr std::size_t seed = 800;
  std::vector<Symbol> cells(W, 0);
  cells[seed] = 1;
  const auto h = evolve(Configuration(cells, 2, Boundary::Fixed, 0), decode_rule(110, 2, 1), T);
  for (std::size_t t = 0; t <= T; ++t) {
    const auto row = h.row(t).cells();
    std::size_t leftmost = W;
    for (std::size_t i = 0; i < W; ++i) {
      if (row[i] == 1) {
        leftmost = std::min(leftmost, i);
        o.require(i <= seed, "black cell right of the seed at step " + std::to_string(t));
      }
    }
    o.require(leftmost == seed - t, "leftmost black cell off the wedge at step " + std::to_string(t));
  }
  const auto img = oracle::parse_plain_pnm(render_pbm(h));
  o.require(img.magic == "P1" && img.width == W && img.height == T + 1, "PBM dimensions are not (1600, 701)");
  if (o.pass) o.detail = "leftmost black = seed - t for t <= 700; PBM 1600x701";
  return o;
}

Outcome engine_oracle() {
  Outcome o;
  std::mt19937_64 rng(0xACCE97);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rule = rng() % 256;
    const auto cells = random_cells(rng, 64, 2);
    for (bool periodic : {true, false}) {
      const Configuration c(cells, 2, periodic ? Boundary::Periodic : Boundary::Fixed, 0);
      o.require(ints(step(c, decode_rule(rule, 2, 1)).cells()) == oracle::naive_step(ints(cells), rule, 2, 1, periodic, 0),
                "stepper disagrees with naive oracle on rule " + std::to_string(rule));
    }
  }
  constexpr std::size_t T = 256;
  constexpr std::size_t W = 2 * T + 3;
  constexpr std::size_t seed = T + 1;
  std::vector<Symbol> cells(W, 0);
  cells[seed] = 1;
  const auto h = evolve(Configuration(cells, 2, Boundary::Fixed, 0), decode_rule(90, 2, 1), T);
  for (std::size_t t = 0; t <= T; ++t) {
    for (std::size_t i = 0; i < W; ++i) {
      const long twice_j = static_cast<long>(i) - static_cast<long>(seed) + static_cast<long>(t);
      const bool odd = twice_j >= 0 && twice_j % 2 == 0 && oracle::binomial_is_odd(t, static_cast<std::uint64_t>(twice_j / 2));
      o.require(h.row(t)[i] == (odd ? 1 : 0), "rule 90 breaks binomial parity at step " + std::to_string(t));
    }
  }
  if (o.pass) o.detail = "1000 tapes x 2 boundaries exact; rule 90 parity through t=256";
  return o;
}

Outcome symmetry() {
  Outcome o;
  const std::vector<Symbol> swap{1, 0};
  std::mt19937_64 rng(0x5E77);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rule = decode_rule(rng() % 256, 2, 1);
    const auto cells = random_cells(rng, 1 + rng() % 128, 2);
    const Configuration c(cells, 2, Boundary::Periodic);
    const auto next = ints(step(c, rule).cells());

    auto reversed = cells;
    std::reverse(reversed.begin(), reversed.end());
    auto want = next;
    std::reverse(want.begin(), want.end());
    o.require(ints(step(c.with_cells(reversed), mirror_rule(rule)).cells()) == want, "mirror commutation failed");

    auto flipped = cells;
    for (auto& s : flipped) s = swap[s];
    want = next;
    for (auto& s : want) s = 1 - s;
    o.require(ints(step(c.with_cells(flipped), permute_symbols_rule(rule, swap)).cells()) == want,
              "complement commutation failed");
  }
  const auto r110 = decode_rule(110, 2, 1);
  o.require(encode_rule(mirror_rule(r110)) == 124, "mirror(110) != 124");
  o.require(encode_rule(permute_symbols_rule(r110, swap)) == 137, "complement(110) != 137");
  if (o.pass) o.detail = "1000 tapes exact; mirror(110)=124; complement(110)=137";
  return o;
}

Outcome estimators() {
  Outcome o;
  const auto s = [](std::string_view d) { return symbols_from_string(d); };
  struct Case {
    const char* text;
    std::size_t m;
    double closed_form;
  };
  const Case cases[] = {
      {"0000", 1, 0.0},
      {"0101", 1, 1.0},
      {"0101", 2, std::log2(3.0) - 2.0 / 3.0},  // p = {2/3, 1/3}: 0.918296...
      {"0001011100", 3, 3.0},                   // de Bruijn B(2,3): all 8 blocks once
      {"012012", 1, std::log2(3.0)},
      {"00000001", 1, std::log2(8.0) - 7.0 / 8.0 * std::log2(7.0)},
  };
  for (const auto& c : cases) {
    const double h = block_entropy(s(c.text), c.m);
    o.require(std::abs(h - c.closed_form) <= 1e-12, std::string("entropy of ") + c.text + " off closed form");
  }
  o.require(std::abs(block_entropy(s("0101"), 2) - 0.918296) <= 1e-6, "0101/m=2 is not 0.918296 bits");

  std::mt19937_64 rng(0x1278);
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = 2 + trial % 3;
    const auto str = random_cells(rng, 1 + rng() % 256, k);
    o.require(lz78_phrase_count(str) == oracle::lz78_reference(ints(str)), "LZ78 disagrees with reference parser");
  }

  const auto toy = parse_ctm_table("00 1.0\n01 2.0\n10 2.0\n11 1.0", 2);
  o.require(bdm(s("00"), toy) == 1.0, "bdm(00) != 1");
  o.require(bdm(s("0000"), toy) == 2.0, "bdm(0000) != 2");
  o.require(bdm(s("0011"), toy) == 2.0, "bdm(0011) != 2");
  if (o.pass) o.detail = "entropy within 1e-12; LZ78 10^4/10^4 exact; BDM toy values exact";
  return o;
}

Outcome identity_invariants() {
  Outcome o;
  {
    const auto cfg = rule110(1024, 512);
    const auto a = generate_process(GeneratorSpec::parse("random:32"), 2, 17, "A");
    const auto b = generate_process(GeneratorSpec::parse("uniform:32:0"), 2, 0, "B");
    const auto joint = run_collision(a, b, 64, cfg);
    const double p = persistence_score(run_solo(joint.layout.a, cfg), joint.a);
    o.require(p == 1.0, "background collision persistence " + std::to_string(p));
  }
  for (auto boundary : {Boundary::Periodic, Boundary::Fixed}) {
    auto cfg = rule110(2048, 256);
    cfg.boundary = boundary;
    const std::size_t gap = 2 * 1 * cfg.steps + 1;
    const auto a = generate_process(GeneratorSpec::parse("random:32"), 2, 3, "A");
    const auto b = generate_process(GeneratorSpec::parse("random:32"), 2, 4, "B");
    const auto joint = run_collision(a, b, gap, cfg);
    o.require(persistence_score(run_solo(joint.layout.a, cfg), joint.a) == 1.0, "separated A lost persistence");
    o.require(persistence_score(run_solo(joint.layout.b, cfg), joint.b) == 1.0, "separated B lost persistence");
  }
  if (o.pass) o.detail = "background collision 1.0; gap > 2rT gives 1.0/1.0 (both boundaries)";
  return o;
}

Outcome sweep_determinism() {
  Outcome o;
  const auto cfg = rule110(1024, 512, 7);
  const auto ga = GeneratorSpec::parse("random:32");
  const auto gb = GeneratorSpec::parse("periodic:32:01");
  const auto first = gns_sweep(cfg, 200, ga, gb, 64);
  const auto second = gns_sweep(cfg, 200, ga, gb, 64);
  const auto concurrent = gns_sweep(cfg, 200, ga, gb, 64, SweepOptions{4});
  const auto csv = write_report_csv(first);
  o.require(csv == write_report_csv(second), "serial runs differ");
  o.require(csv == write_report_csv(concurrent), "serial and concurrent runs differ");
  o.require(first.wins_higher + first.wins_lower + first.ties == 200, "counts do not sum to 200");
  const auto p = first.abidance_probability();
  o.require(p.has_value() && *p >= 0.0 && *p <= 1.0, "abidance probability outside [0, 1]");
  // Seeded regression fixture (master seed 7), frozen from the first run.
  o.require(first.wins_higher == 170 && first.wins_lower == 30 && first.ties == 0,
            "counts drifted from fixture 170/30/0: " + std::to_string(first.wins_higher) + "/" +
                std::to_string(first.wins_lower) + "/" + std::to_string(first.ties));
  if (o.pass) {
    o.detail = "byte-identical CSV x3; counts 170/30/0; abidance_probability=" + format_real(*p);
  }
  return o;
}

Outcome classification() {
  Outcome o;
  auto cfg = rule110(2048, 512);

  auto quiet_cfg = cfg;
  quiet_cfg.measure = MeasureSpec::entropy(8, 2);
  const auto quiet = centered(generate_process(GeneratorSpec::parse("uniform:8:0"), 2, 0, "bg"), cfg.width);
  const auto quiet_label = classify_behavior(run_solo(quiet, quiet_cfg));
  o.require(quiet_label == Behavior::Simple, std::string("all-background run classified ") + to_string(quiet_label));
  const double quiet_lz = tail_mean(run_solo(quiet, cfg));

  const auto seed = centered(generate_process(GeneratorSpec::parse("single:8:1:0"), 2, 0, "seed"), cfg.width);
  const auto traj = run_solo(seed, cfg);
  const auto label = classify_behavior(traj);
  o.require(label == Behavior::Complex, std::string("rule 110 single seed classified ") + to_string(label));
  if (o.pass) {
    o.detail = "background Simple (entropy m=8, scaled); rule 110 seed Complex (lz78n tail mean " +
               format_real(tail_mean(traj)) + "); background lz78n tail mean " + format_real(quiet_lz);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "rule 110 decoding and elementary round trip", 1.0, rule_decoding},
      {"AC2", "rule 110 single-seed wedge over 700 steps", 1.0, single_seed_wedge},
      {"AC3", "stepper vs naive oracle; rule 90 binomial parity", 10.0, engine_oracle},
      {"AC4", "mirror and symbol-permutation commutation", 10.0, symmetry},
      {"AC5", "entropy, LZ78 and BDM estimator correctness", 30.0, estimators},
      {"AC6", "persistence identity invariants", 10.0, identity_invariants},
      {"AC7", "200-trial sweep determinism", 60.0, sweep_determinism},
      {"AC8", "behavior classification sanity", 5.0, classification},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && seconds > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail = "exceeded the " + format_real(c.budget_seconds) + " s budget";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %s %s: %s (%.3f s / %.0f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title,
                outcome.detail.c_str(), seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
