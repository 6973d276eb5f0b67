#include "gnslab/lab_config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>

#include "gnslab/error.hpp"
#include "gnslab/io.hpp"

namespace gnslab {

namespace {

constexpr std::array kKeys = {"rule",   "k",   "r",         "width", "steps",  "boundary", "background",
                              "measure", "block", "ctm_table", "window", "seed", "trials",   "gap",
                              "proc_a", "proc_b", "thresholds"};

struct Entry {
  std::string value;
  std::string where;  // "line N" or "--set"
};

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_value(const Entry& e, std::string_view key, const std::string& what) {
  fail(ErrorKind::Validation, e.where + ": key '" + std::string(key) + "': " + what);
}

template <typename T>
T parse_unsigned(const Entry& e, std::string_view key) {
  T value{};
  const auto* first = e.value.data();
  const auto* last = first + e.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (e.value.empty() || ec != std::errc{} || ptr != last) {
    bad_value(e, key, "'" + e.value + "' is not a non-negative integer");
  }
  return value;
}

double parse_real(std::string_view text, const Entry& e, std::string_view key) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    bad_value(e, key, "'" + std::string(text) + "' is not a finite number");
  }
  return value;
}

std::string shortest_real(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

BackgroundSpec parse_background(const Entry& e) {
  const auto colon = e.value.find(':');
  if (colon == std::string::npos) bad_value(e, "background", "expected uniform:<sym>, periodic:<pattern> or random:<seed>");
  const std::string kind = e.value.substr(0, colon);
  const Entry arg{e.value.substr(colon + 1), e.where};
  if (kind == "uniform") {
    const auto s = parse_unsigned<unsigned>(arg, "background");
    if (s >= static_cast<unsigned>(kMaxSymbols)) bad_value(e, "background", "symbol too large");
    return BackgroundSpec::uniform(static_cast<Symbol>(s));
  }
  if (kind == "periodic") {
    try {
      auto pattern = symbols_from_string(arg.value);
      if (pattern.empty()) bad_value(e, "background", "periodic pattern is empty");
      return BackgroundSpec::periodic(std::move(pattern));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Parse) throw;
      bad_value(e, "background", err.what());
    }
  }
  if (kind == "random") return BackgroundSpec::random(parse_unsigned<std::uint64_t>(arg, "background"));
  bad_value(e, "background", "unknown background kind '" + kind + "'");
}

std::string background_to_string(const BackgroundSpec& b) {
  switch (b.kind) {
    case BackgroundSpec::Kind::Uniform: return "uniform:" + std::to_string(b.symbol);
    case BackgroundSpec::Kind::Periodic: return "periodic:" + symbols_to_string(b.pattern);
    case BackgroundSpec::Kind::Random: return "random:" + std::to_string(b.seed);
  }
  return {};
}

}  // namespace

LabConfig parse_config(std::string_view text, std::span<const std::string> overrides) {
  std::map<std::string, Entry, std::less<>> entries;

  const auto accept = [&](std::string_view line, const std::string& where, bool replace) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::Parse, where + ": expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      fail(ErrorKind::Parse, where + ": unknown key '" + key + "'");
    }
    if (!replace && entries.contains(key)) fail(ErrorKind::Parse, where + ": duplicate key '" + key + "'");
    entries[key] = Entry{value, where};
  };

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    accept(line, "line " + std::to_string(line_no), false);
  }
  for (const auto& o : overrides) accept(trim(o), "--set " + o, true);

  LabConfig cfg;
  const auto get = [&](std::string_view key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  if (const auto* e = get("k")) {
    cfg.k = static_cast<int>(parse_unsigned<unsigned>(*e, "k"));
    if (cfg.k < 2 || cfg.k > kMaxSymbols) bad_value(*e, "k", "must be in [2, " + std::to_string(kMaxSymbols) + "]");
  }
  if (const auto* e = get("r")) {
    cfg.r = static_cast<int>(parse_unsigned<unsigned>(*e, "r"));
    if (cfg.r < 1) bad_value(*e, "r", "must be >= 1");
  }
  if (const auto* e = get("rule")) {
    if (e->value.empty() || e->value.find_first_not_of("0123456789") != std::string::npos) {
      bad_value(*e, "rule", "'" + e->value + "' is not a non-negative integer");
    }
    cfg.rule = RuleNumber(e->value);
    RuleNumber bound;
    try {
      bound = rule_count(cfg.k, cfg.r);
    } catch (const Error& err) {
      bad_value(*e, "rule", err.what());
    }
    if (cfg.rule >= bound) {
      bad_value(*e, "rule", "rule " + e->value + " must be below k^(k^(2r+1)) = " +
                                (bound.str().size() > 40 ? std::string("a number with ") +
                                                               std::to_string(bound.str().size()) + " digits"
                                                         : bound.str()));
    }
  }
  if (const auto* e = get("width")) {
    cfg.width = parse_unsigned<std::size_t>(*e, "width");
    if (cfg.width == 0) bad_value(*e, "width", "must be >= 1");
  }
  if (const auto* e = get("steps")) {
    cfg.steps = parse_unsigned<std::size_t>(*e, "steps");
    if (cfg.steps == 0) bad_value(*e, "steps", "must be >= 1");
  }
  if (const auto* e = get("boundary")) {
    if (e->value == "periodic") {
      cfg.boundary = Boundary::Periodic;
    } else if (e->value == "fixed") {
      cfg.boundary = Boundary::Fixed;
    } else {
      bad_value(*e, "boundary", "expected periodic or fixed");
    }
  }
  if (const auto* e = get("background")) {
    cfg.background = parse_background(*e);
    for (Symbol s : cfg.background.kind == BackgroundSpec::Kind::Periodic ? cfg.background.pattern
                                                                          : std::vector<Symbol>{cfg.background.symbol}) {
      if (s >= cfg.k) bad_value(*e, "background", "symbol " + std::to_string(s) + " >= k");
    }
  }
  if (const auto* e = get("measure")) {
    if (e->value == "entropy") {
      cfg.measure = MeasureKind::BlockEntropy;
    } else if (e->value == "lz78") {
      cfg.measure = MeasureKind::Lz78;
    } else if (e->value == "lz78n") {
      cfg.measure = MeasureKind::Lz78Normalized;
    } else if (e->value == "bdm") {
      cfg.measure = MeasureKind::Bdm;
    } else {
      bad_value(*e, "measure", "expected entropy, lz78, lz78n or bdm");
    }
  }
  if (const auto* e = get("block")) {
    cfg.block = parse_unsigned<std::size_t>(*e, "block");
    if (*cfg.block == 0) bad_value(*e, "block", "must be >= 1");
  }
  if (const auto* e = get("ctm_table")) {
    if (e->value.empty()) bad_value(*e, "ctm_table", "path is empty");
    cfg.ctm_table = e->value;
  }
  if (const auto* e = get("window")) {
    if (e->value == "fixed") {
      cfg.window = WindowMode::Fixed;
    } else if (e->value == "lightcone") {
      cfg.window = WindowMode::LightCone;
    } else {
      bad_value(*e, "window", "expected fixed or lightcone");
    }
  }
  if (const auto* e = get("seed")) cfg.seed = parse_unsigned<std::uint64_t>(*e, "seed");
  if (const auto* e = get("trials")) {
    cfg.trials = parse_unsigned<std::size_t>(*e, "trials");
    if (*cfg.trials == 0) bad_value(*e, "trials", "must be >= 1");
  }
  if (const auto* e = get("gap")) cfg.gap = parse_unsigned<std::size_t>(*e, "gap");
  for (const char* key : {"proc_a", "proc_b"}) {
    if (const auto* e = get(key)) {
      try {
        auto spec = GeneratorSpec::parse(e->value);
        (void)generate_process(spec, cfg.k, 0);
        (std::string_view(key) == "proc_a" ? cfg.proc_a : cfg.proc_b) = std::move(spec);
      } catch (const Error& err) {
        bad_value(*e, key, err.what());
      }
    }
  }
  if (const auto* e = get("thresholds")) {
    const auto comma = e->value.find(',');
    if (comma == std::string::npos) bad_value(*e, "thresholds", "expected <simple>,<complex>");
    const std::string_view v(e->value);
    cfg.thresholds.simple = parse_real(trim(v.substr(0, comma)), *e, "thresholds");
    cfg.thresholds.complex = parse_real(trim(v.substr(comma + 1)), *e, "thresholds");
    if (!(cfg.thresholds.simple < cfg.thresholds.complex)) bad_value(*e, "thresholds", "simple must be below complex");
  }
  if (cfg.measure == MeasureKind::Bdm && !cfg.ctm_table) {
    fail(ErrorKind::Parse, "missing key 'ctm_table' required by measure=bdm");
  }

  for (const char* key : {"rule", "width", "steps"}) {
    if (!get(key)) fail(ErrorKind::Parse, "missing required key '" + std::string(key) + "'");
  }
  return cfg;
}

std::string serialize_config(const LabConfig& c) {
  std::ostringstream out;
  out << "rule=" << c.rule.str() << '\n'
      << "k=" << c.k << '\n'
      << "r=" << c.r << '\n'
      << "width=" << c.width << '\n'
      << "steps=" << c.steps << '\n'
      << "boundary=" << to_string(c.boundary) << '\n'
      << "background=" << background_to_string(c.background) << '\n'
      << "measure=" << to_string(c.measure) << '\n';
  if (c.block) out << "block=" << *c.block << '\n';
  if (c.ctm_table) out << "ctm_table=" << *c.ctm_table << '\n';
  out << "window=" << to_string(c.window) << '\n' << "seed=" << c.seed << '\n';
  if (c.trials) out << "trials=" << *c.trials << '\n';
  if (c.gap) out << "gap=" << *c.gap << '\n';
  if (c.proc_a) out << "proc_a=" << c.proc_a->to_string() << '\n';
  if (c.proc_b) out << "proc_b=" << c.proc_b->to_string() << '\n';
  out << "thresholds=" << shortest_real(c.thresholds.simple) << ',' << shortest_real(c.thresholds.complex) << '\n';
  return out.str();
}

void require_keys(const LabConfig& config, std::string_view subcommand) {
  const auto need = [&](bool present, const char* key) {
    if (!present) {
      fail(ErrorKind::Parse, "missing key '" + std::string(key) + "' required by " + std::string(subcommand));
    }
  };
  if (subcommand == "measure" || subcommand == "classify") need(config.proc_a.has_value(), "proc_a");
  if (subcommand == "collide" || subcommand == "sweep") {
    need(config.proc_a.has_value(), "proc_a");
    need(config.proc_b.has_value(), "proc_b");
    need(config.gap.has_value(), "gap");
  }
  if (subcommand == "sweep") need(config.trials.has_value(), "trials");
}

ExperimentConfig to_experiment(const LabConfig& c) {
  MeasureSpec measure;
  switch (c.measure) {
    case MeasureKind::BlockEntropy: measure = MeasureSpec::entropy(c.block.value_or(kDefaultEntropyBlock), c.k); break;
    case MeasureKind::Lz78: measure = MeasureSpec::lz78(c.k); break;
    case MeasureKind::Lz78Normalized: measure = MeasureSpec::lz78n(c.k); break;
    case MeasureKind::Bdm: {
      if (!c.ctm_table) fail(ErrorKind::Parse, "missing key 'ctm_table' required by measure=bdm");
      auto table = std::make_shared<const CtmTable>(parse_ctm_table(read_file(*c.ctm_table), c.k));
      measure = MeasureSpec::block_decomposition(std::move(table));
      break;
    }
  }
  ExperimentConfig exp(decode_rule(c.rule, c.k, c.r));
  exp.width = c.width;
  exp.steps = c.steps;
  exp.boundary = c.boundary;
  exp.background = c.background;
  exp.measure = std::move(measure);
  exp.window = c.window;
  exp.seed = c.seed;
  exp.validate();
  return exp;
}

}  // namespace gnslab
