#include "poptrade/io.hpp"

#include <charconv>
#include <cstdio>

namespace poptrade {

std::string format_shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_trades_csv(std::ostream& out, const std::vector<TradeRecord>& trades) {
  out << "trader_id,close_date,daily_return\n";
  for (const TradeRecord& tr : trades) {
    out << tr.trader_id << ',' << tr.close_date.to_iso() << ','
        << format_shortest(tr.daily_return) << '\n';
  }
}

void write_mirrors_csv(std::ostream& out, const std::vector<MirrorEvent>& mirrors) {
  out << "copier_id,target_id,start_date,end_date\n";
  for (const MirrorEvent& ev : mirrors) {
    out << ev.copier_id << ',' << ev.target_id << ',' << ev.start_date.to_iso() << ',';
    if (ev.end_date) out << ev.end_date->to_iso();
    out << '\n';
  }
}

void write_ground_truth_csv(std::ostream& out, const GroundTruth& truth) {
  out << "trader_id,quality_bit,day,popularity,performance\n";
  for (const TraderTruth& trader : truth.traders) {
    const Trajectory& traj = trader.trajectory;
    for (std::size_t t = 0; t < traj.dates.size(); ++t) {
      out << traj.trader_id << ',' << (trader.quality == Quality::Good ? 1 : 0) << ','
          << traj.dates[t].to_iso() << ',' << traj.popularity[t] << ',';
      if (traj.performance[t]) out << format_shortest(*traj.performance[t]);
      out << '\n';
    }
  }
}

void write_regression_csv(std::ostream& out,
                          const std::vector<std::pair<std::string, RegressionResult>>& results) {
  out << "condition,term,coef,se,t,p,n_obs,r2\n";
  for (const auto& [condition, r] : results) {
    for (std::size_t j = 0; j < RegressionResult::term_names.size(); ++j) {
      out << condition << ',' << RegressionResult::term_names[j] << ','
          << format_g12(r.coefficients[j]) << ',' << format_g12(r.standard_errors[j]) << ','
          << format_g12(r.t_stats[j]) << ',' << format_g12(r.p_values[j]) << ',' << r.n_obs << ','
          << format_g12(r.r_squared) << '\n';
    }
  }
}

void write_bins_csv(std::ostream& out,
                    const std::vector<std::pair<std::string, std::vector<BinnedCell>>>& by_mode) {
  out << "mode,pop_bin,perf_bin,mean_delta,count,ci_half_width\n";
  for (const auto& [mode, cells] : by_mode) {
    for (const BinnedCell& cell : cells) {
      out << mode << ',' << cell.pop_bin << ',' << format_g12(cell.perf_bin) << ','
          << format_g12(cell.mean_delta) << ',' << cell.count << ','
          << format_g12(cell.ci_half_width) << '\n';
    }
  }
}

void write_lines_csv(std::ostream& out, const std::vector<GroupLine>& lines) {
  out << "pop_bin,slope,intercept\n";
  for (const GroupLine& line : lines) {
    out << line.pop_bin << ',' << format_g12(line.slope) << ',' << format_g12(line.intercept)
        << '\n';
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace poptrade
