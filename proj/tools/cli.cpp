#include "cli.hpp"

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gnslab/engine.hpp"
#include "gnslab/error.hpp"
#include "gnslab/harness.hpp"
#include "gnslab/io.hpp"
#include "gnslab/lab_config.hpp"
#include "gnslab/random.hpp"
#include "gnslab/render.hpp"
#include "gnslab/report_csv.hpp"

namespace gnslab::cli {

namespace {

struct Options {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out;
  std::string in;
  std::string format;
  std::string charset;
  unsigned threads = 1;
};

void add_config_options(CLI::App* sub, Options& opt) {
  sub->add_option("--config", opt.config_path, "key=value experiment file");
  sub->add_option("--set", opt.sets, "override one key, e.g. --set rule=110")->take_all();
}

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), out_(out), err_(err) {}

  LabConfig load(std::string_view subcommand) const {
    const std::string text = opt_.config_path.empty() ? std::string{} : read_file(opt_.config_path);
    auto cfg = parse_config(text, opt_.sets);
    require_keys(cfg, subcommand);
    return cfg;
  }

  ExperimentConfig experiment(const LabConfig& cfg) const {
    auto exp = to_experiment(cfg);
    if (exp.boundary == Boundary::Fixed && !exp.rule.is_quiescent(exp.background.edge_symbol())) {
      err_ << "warning: rule does not fix the uniform background " << exp.background.edge_symbol()
           << "; patterns are not confined to light cones\n";
    }
    return exp;
  }

  void emit(std::string_view bytes) const {
    if (opt_.out.empty()) {
      out_ << bytes;
    } else {
      write_file_atomic(opt_.out, bytes);
    }
  }

  SpaceTimeHistory evolve_from(const LabConfig& cfg) const {
    const auto exp = experiment(cfg);
    std::vector<ProcessSpec> procs;
    if (cfg.proc_a) {
      procs.push_back(centered(generate_process(*cfg.proc_a, cfg.k, derive_seed(cfg.seed, 0), "A"), cfg.width));
    }
    const auto initial = build_initial(cfg.width, cfg.background, procs, cfg.k, cfg.boundary);
    return evolve(initial, exp.rule, cfg.steps);
  }

  FeatureTrajectory solo_from(const LabConfig& cfg) const {
    const auto exp = experiment(cfg);
    const auto p = centered(generate_process(*cfg.proc_a, cfg.k, derive_seed(cfg.seed, 0), "A"), cfg.width);
    return run_solo(p, exp);
  }

  int evolve_cmd() const {
    emit(render_pgm(evolve_from(load("evolve"))));
    return kExitOk;
  }

  int render_cmd() const {
    std::optional<SpaceTimeHistory> history;
    if (!opt_.config_path.empty() || !opt_.sets.empty()) {
      history = evolve_from(load("render"));
    } else if (!opt_.in.empty()) {
      history = read_history_pnm(read_file(opt_.in));
    } else {
      const std::string text{std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
      history = read_history_pnm(text);
    }
    std::string format = opt_.format;
    if (format.empty()) format = history->symbols() == 2 ? "pbm" : "pgm";
    if (format == "pbm") {
      emit(render_pbm(*history));
    } else if (format == "pgm") {
      emit(render_pgm(*history));
    } else {
      std::string charset = opt_.charset;
      if (charset.empty()) charset = history->symbols() == 2 ? ".#" : "0123456789abcdefghijklmnopqrstuvwxyz";
      emit(render_ascii(*history, charset));
    }
    return kExitOk;
  }

  int measure_cmd() const {
    emit(write_trajectory_csv(solo_from(load("measure"))));
    return kExitOk;
  }

  int classify_cmd() const {
    const auto cfg = load("classify");
    const auto label = classify_behavior(solo_from(cfg), cfg.thresholds);
    emit(std::string(to_string(label)) + "\n");
    return kExitOk;
  }

  int collide_cmd() const {
    const auto cfg = load("collide");
    if (opt_.out.empty()) fail(ErrorKind::Validation, "collide needs --out <prefix>");
    const auto exp = experiment(cfg);
    const auto a = generate_process(*cfg.proc_a, cfg.k, derive_seed(cfg.seed, 0), "A");
    const auto b = generate_process(*cfg.proc_b, cfg.k, derive_seed(cfg.seed, 1), "B");
    const auto result = run_collision(a, b, *cfg.gap, exp);
    write_file_atomic(opt_.out + ".a.csv", write_trajectory_csv(result.a));
    write_file_atomic(opt_.out + ".b.csv", write_trajectory_csv(result.b));
    write_file_atomic(opt_.out + ".history.pgm", render_pgm(result.history));
    return kExitOk;
  }

  int sweep_cmd() const {
    const auto cfg = load("sweep");
    const auto exp = experiment(cfg);
    const auto report = gns_sweep(exp, *cfg.trials, *cfg.proc_a, *cfg.proc_b, *cfg.gap, SweepOptions{opt_.threads});
    emit(write_report_csv(report));
    return kExitOk;
  }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"1-D cellular automaton laboratory: evolve, measure, collide and sweep processes", "gnslab"};
  app.require_subcommand(1);
  Options opt;

  auto* evolve_sub = app.add_subcommand("evolve", "evolve the configured tape; writes a plain PGM history");
  add_config_options(evolve_sub, opt);
  evolve_sub->add_option("--out", opt.out, "output path (default: standard output)");

  auto* render_sub = app.add_subcommand("render", "render a history as PBM, PGM or ASCII");
  add_config_options(render_sub, opt);
  render_sub->add_option("--in", opt.in, "history image (default: standard input)");
  render_sub->add_option("--format", opt.format, "pbm, pgm or ascii")->check(CLI::IsMember({"pbm", "pgm", "ascii"}));
  render_sub->add_option("--charset", opt.charset, "ASCII characters for symbols 0..k-1");
  render_sub->add_option("--out", opt.out, "output path (default: standard output)");

  auto* measure_sub = app.add_subcommand("measure", "feature trajectory of proc_a evolved alone (step,value CSV)");
  add_config_options(measure_sub, opt);
  measure_sub->add_option("--out", opt.out, "output path (default: standard output)");

  auto* collide_sub = app.add_subcommand("collide", "collide proc_a with proc_b");
  add_config_options(collide_sub, opt);
  collide_sub->add_option("--out", opt.out, "prefix for <prefix>.a.csv, <prefix>.b.csv, <prefix>.history.pgm")
      ->required();

  auto* sweep_sub = app.add_subcommand("sweep", "seeded collision sweep; writes the survival report CSV");
  add_config_options(sweep_sub, opt);
  sweep_sub->add_option("--out", opt.out, "output path (default: standard output)");
  sweep_sub->add_option("--threads", opt.threads, "worker threads, 0 = all cores");

  auto* classify_sub = app.add_subcommand("classify", "Simple / Intermediate / Complex label for proc_a");
  add_config_options(classify_sub, opt);
  classify_sub->add_option("--out", opt.out, "output path (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitInput;
  }

  Runner run(opt, in, out, err);
  try {
    if (evolve_sub->parsed()) return run.evolve_cmd();
    if (render_sub->parsed()) return run.render_cmd();
    if (measure_sub->parsed()) return run.measure_cmd();
    if (collide_sub->parsed()) return run.collide_cmd();
    if (sweep_sub->parsed()) return run.sweep_cmd();
    if (classify_sub->parsed()) return run.classify_cmd();
  } catch (const Error& e) {
    err << "gnslab: " << e.what() << '\n';
    return e.is_input_error() ? kExitInput : kExitRuntime;
  } catch (const std::exception& e) {
    err << "gnslab: " << e.what() << '\n';
    return kExitRuntime;
  }
  err << app.help();
  return kExitInput;
}

}  // namespace gnslab::cli
