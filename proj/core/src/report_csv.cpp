#include "gnslab/report_csv.hpp"

#include <array>
#include <charconv>

namespace gnslab {

std::string format_real(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
  return std::string(buf.data(), ptr);
}

std::string write_report_csv(const SurvivalReport& report) {
  std::string out = "trial,seed,solo_complexity_a,solo_complexity_b,persistence_a,persistence_b,winner,rank_agrees\n";
  for (const auto& rec : report.records) {
    out += std::to_string(rec.trial);
    out += ',';
    out += std::to_string(rec.seed);
    for (double v : {rec.solo_complexity_a, rec.solo_complexity_b, rec.persistence_a, rec.persistence_b}) {
      out += ',';
      out += format_real(v);
    }
    out += ',';
    out += to_string(rec.winner);
    out += rec.rank_agrees ? ",true\n" : ",false\n";
  }
  out += "# n_trials=" + std::to_string(report.n_trials()) + "\n";
  out += "# wins_higher=" + std::to_string(report.wins_higher) + "\n";
  out += "# wins_lower=" + std::to_string(report.wins_lower) + "\n";
  out += "# ties=" + std::to_string(report.ties) + "\n";
  const auto p = report.abidance_probability();
  out += "# abidance_probability=" + (p ? format_real(*p) : std::string("undefined")) + "\n";
  return out;
}

std::string write_trajectory_csv(const FeatureTrajectory& trajectory) {
  std::string out = "step,value\n";
  for (std::size_t t = 0; t < trajectory.values.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_real(trajectory.values[t]);
    out += '\n';
  }
  return out;
}

}  // namespace gnslab
