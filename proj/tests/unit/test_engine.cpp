#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "gnslab/engine.hpp"
#include "gnslab/error.hpp"

using namespace gnslab;
using testing::as_ints;
using testing::tape;

TEST_CASE("step examples") {
  const auto r110 = decode_rule(110, 2, 1);
  CHECK(symbols_to_string(step(tape("00100"), r110).cells()) == "01100");

  std::mt19937_64 rng(3);
  const auto cfg = Configuration(testing::random_symbols(rng, 40, 2), 2, Boundary::Periodic);
  const auto zeros = step(cfg, decode_rule(0, 2, 1));
  const auto ones = step(cfg, decode_rule(255, 2, 1));
  for (Symbol s : zeros.cells()) CHECK(s == 0);
  for (Symbol s : ones.cells()) CHECK(s == 1);
  CHECK(step(cfg, decode_rule(204, 2, 1)) == cfg);
}

TEST_CASE("step keeps width, boundary and k") {
  const auto c = tape("0110", Boundary::Periodic);
  const auto next = step(c, decode_rule(30, 2, 1));
  CHECK(next.width() == 4);
  CHECK(next.boundary() == Boundary::Periodic);
  CHECK(next.symbols() == 2);
}

TEST_CASE("step reports the index of a symbol outside the rule alphabet") {
  const Configuration c(std::vector<Symbol>{0, 1, 2, 0}, 3, Boundary::Periodic);
  try {
    (void)step(c, decode_rule(110, 2, 1));
    FAIL("expected data error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Data);
    CHECK(std::string(e.what()).find("cell 2") != std::string::npos);
  }
}

TEST_CASE("evolve from a single seed under rule 110") {
  const auto h = evolve(testing::single_seed(21, 10, Boundary::Fixed), decode_rule(110, 2, 1), 3);
  REQUIRE(h.row_count() == 4);
  const std::vector<std::vector<int>> expected = {{0}, {-1, 0}, {-2, -1, 0}, {-3, -2, 0}};
  for (std::size_t t = 0; t < 4; ++t) {
    std::vector<int> black;
    for (std::size_t i = 0; i < 21; ++i) {
      if (h.row(t)[i] == 1) black.push_back(static_cast<int>(i) - 10);
    }
    CHECK(black == expected[t]);
  }
}

TEST_CASE("evolve with zero steps returns the initial row") {
  const auto c = tape("0110");
  const auto h = evolve(c, decode_rule(110, 2, 1), 0);
  REQUIRE(h.row_count() == 1);
  CHECK(h.row(0) == c);
}

TEST_CASE("evolve is replayable") {
  std::mt19937_64 rng(5);
  const auto c = Configuration(testing::random_symbols(rng, 64, 2), 2, Boundary::Periodic);
  const auto rule = decode_rule(54, 2, 1);
  const auto h = evolve(c, rule, 50);
  for (std::size_t t = 0; t + 1 < h.row_count(); ++t) CHECK(step(h.row(t), rule) == h.row(t + 1));
  CHECK(evolve(c, rule, 50) == h);
}

TEST_CASE("step agrees with the naive stepper, k=2 r=1, both boundaries") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rule = rng() % 256;
    const auto cells = testing::random_symbols(rng, 64, 2);
    for (bool periodic : {true, false}) {
      const Symbol bg = static_cast<Symbol>(rng() % 2);
      const Configuration c(cells, 2, periodic ? Boundary::Periodic : Boundary::Fixed, bg);
      const auto got = as_ints(step(c, decode_rule(rule, 2, 1)).cells());
      REQUIRE(got == oracle::naive_step(as_ints(cells), rule, 2, 1, periodic, bg));
    }
  }
}

TEST_CASE("step agrees with the naive stepper for wider rules") {
  std::mt19937_64 rng(77);
  for (auto [k, r] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{2, 3}}) {
    for (int trial = 0; trial < 50; ++trial) {
      // rule numbers that fit in 64 bits keep the oracle simple
      std::uint64_t rule = rng();
      if (k == 3) rule %= rule_count(3, 1).convert_to<std::uint64_t>();
      if (k == 2) rule &= 0xFFFFFFFFull;  // r=3: digits above 32 stay zero
      const auto cells = testing::random_symbols(rng, 17, k);
      for (bool periodic : {true, false}) {
        const Configuration c(cells, k, periodic ? Boundary::Periodic : Boundary::Fixed, 0);
        const auto got = as_ints(step(c, decode_rule(rule, k, r)).cells());
        REQUIRE(got == oracle::naive_step(as_ints(cells), rule, k, r, periodic, 0));
      }
    }
  }
}

TEST_CASE("periodic tapes narrower than the neighborhood wrap repeatedly") {
  std::mt19937_64 rng(9);
  for (std::size_t w = 1; w <= 4; ++w) {
    const auto cells = testing::random_symbols(rng, w, 2);
    const std::uint64_t rule = rng() & 0xFFFFFFFFull;
    const Configuration c(cells, 2, Boundary::Periodic);
    CHECK(as_ints(step(c, decode_rule(rule, 2, 2)).cells()) == oracle::naive_step(as_ints(cells), rule, 2, 2, true, 0));
  }
}

TEST_CASE("rule 90 from a single seed is Pascal's triangle mod 2") {
  constexpr std::size_t T = 256;
  constexpr std::size_t W = 2 * T + 3;
  constexpr std::size_t seed = T + 1;
  const auto h = evolve(testing::single_seed(W, seed, Boundary::Fixed), decode_rule(90, 2, 1), T);
  for (std::size_t t = 0; t <= T; ++t) {
    for (std::size_t i = 0; i < W; ++i) {
      const long x = static_cast<long>(i) - static_cast<long>(seed);
      const long twice_j = x + static_cast<long>(t);
      bool expected = false;
      if (twice_j >= 0 && twice_j % 2 == 0) expected = oracle::binomial_is_odd(t, static_cast<std::uint64_t>(twice_j / 2));
      REQUIRE(h.row(t)[i] == (expected ? 1 : 0));
    }
  }
}

TEST_CASE("symmetry properties hold on random tapes") {
  std::mt19937_64 rng(4242);
  const std::vector<Symbol> swap{1, 0};
  for (int trial = 0; trial < 300; ++trial) {
    const auto rule = decode_rule(rng() % 256, 2, 1);
    auto cells = testing::random_symbols(rng, 1 + rng() % 80, 2);
    const Configuration c(cells, 2, Boundary::Periodic);
    const auto next = step(c, rule);

    // mirror
    auto reversed = cells;
    std::reverse(reversed.begin(), reversed.end());
    auto mirrored = as_ints(step(c.with_cells(reversed), mirror_rule(rule)).cells());
    auto expect = as_ints(next.cells());
    std::reverse(expect.begin(), expect.end());
    CHECK(mirrored == expect);

    // complementation
    auto flipped = cells;
    for (auto& s : flipped) s = swap[s];
    auto got = as_ints(step(c.with_cells(flipped), permute_symbols_rule(rule, swap)).cells());
    auto want = as_ints(next.cells());
    for (auto& s : want) s = 1 - s;
    CHECK(got == want);

    // shift equivariance
    const std::size_t shift = rng() % cells.size();
    auto rotated = cells;
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift), rotated.end());
    auto next_rotated = as_ints(next.cells());
    std::rotate(next_rotated.begin(), next_rotated.begin() + static_cast<std::ptrdiff_t>(shift), next_rotated.end());
    CHECK(as_ints(step(c.with_cells(rotated), rule).cells()) == next_rotated);
  }
}

TEST_CASE("three-symbol permutations commute with stepping") {
  std::mt19937_64 rng(31);
  std::vector<Symbol> perm{0, 1, 2};
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto rule = decode_rule(RuleNumber(rng()) % rule_count(3, 1), 3, 1);
    const auto cells = testing::random_symbols(rng, 30, 3);
    const Configuration c(cells, 3, Boundary::Periodic);
    auto mapped = cells;
    for (auto& s : mapped) s = perm[s];
    auto want = as_ints(step(c, rule).cells());
    for (auto& s : want) s = perm[static_cast<std::size_t>(s)];
    CHECK(as_ints(step(c.with_cells(mapped), permute_symbols_rule(rule, perm)).cells()) == want);
  }
}

TEST_CASE("light cone: quiescent rules stay background outside r*t of the seeds") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 40) {
    const auto rule = decode_rule(rng() % 256, 2, 1);
    if (!rule.is_quiescent(0)) continue;
    ++checked;
    std::vector<Symbol> cells(200, 0);
    const std::size_t lo = 90;
    const std::size_t hi = 110;
    for (std::size_t i = lo; i < hi; ++i) cells[i] = static_cast<Symbol>(rng() % 2);
    const auto h = evolve(Configuration(cells, 2, Boundary::Fixed, 0), rule, 60);
    for (std::size_t t = 0; t <= 60; ++t) {
      for (std::size_t i = 0; i < 200; ++i) {
        if (i + t < lo || i >= hi + t) REQUIRE(h.row(t)[i] == 0);
      }
    }
  }
}

TEST_CASE("build_initial") {
  const ProcessSpec p{"p", symbols_from_string("11"), 2};
  const std::vector<ProcessSpec> one{p};
  CHECK(symbols_to_string(build_initial(7, BackgroundSpec::uniform(0), one, 2, Boundary::Periodic).cells()) ==
        "0011000");

  CHECK(symbols_to_string(
            build_initial(8, BackgroundSpec::periodic(symbols_from_string("01")), {}, 2, Boundary::Periodic).cells()) ==
        "01010101");

  const std::vector<ProcessSpec> overlapping{{"left", symbols_from_string("111"), 1}, {"right", symbols_from_string("11"), 3}};
  try {
    (void)build_initial(10, BackgroundSpec::uniform(0), overlapping, 2, Boundary::Periodic);
    FAIL("expected placement error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Placement);
    CHECK(std::string(e.what()).find("left") != std::string::npos);
    CHECK(std::string(e.what()).find("right") != std::string::npos);
  }

  const std::vector<ProcessSpec> outside{{"x", symbols_from_string("111"), 6}};
  try {
    (void)build_initial(8, BackgroundSpec::uniform(0), outside, 2, Boundary::Periodic);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Range);
  }
  const std::vector<ProcessSpec> negative{{"x", symbols_from_string("1"), -1}};
  CHECK_THROWS_AS(build_initial(8, BackgroundSpec::uniform(0), negative, 2, Boundary::Periodic), Error);
}

TEST_CASE("random background is seeded") {
  const auto a = build_initial(64, BackgroundSpec::random(1), {}, 3, Boundary::Periodic);
  const auto b = build_initial(64, BackgroundSpec::random(1), {}, 3, Boundary::Periodic);
  const auto c = build_initial(64, BackgroundSpec::random(2), {}, 3, Boundary::Periodic);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(std::any_of(a.cells().begin(), a.cells().end(), [](Symbol s) { return s == 2; }));
}

TEST_CASE("configuration validates cells") {
  CHECK_THROWS_AS(Configuration(std::vector<Symbol>{0, 2}, 2), Error);
  CHECK_THROWS_AS(Configuration(std::vector<Symbol>{}, 2), Error);
}
