#ifndef POPTRADE_IO_HPP
#define POPTRADE_IO_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poptrade/analysis.hpp"
#include "poptrade/ingest.hpp"
#include "poptrade/simulator.hpp"

namespace poptrade {

/// Shortest representation that parses back to the same double (used in the
/// data CSVs so a write/parse round trip is exact).
std::string format_shortest(double v);

/// printf "%.12g" (the analysis CSVs print 12 significant digits).
std::string format_g12(double v);

void write_trades_csv(std::ostream& out, const std::vector<TradeRecord>& trades);
void write_mirrors_csv(std::ostream& out, const std::vector<MirrorEvent>& mirrors);
void write_ground_truth_csv(std::ostream& out, const GroundTruth& truth);

void write_regression_csv(std::ostream& out,
                          const std::vector<std::pair<std::string, RegressionResult>>& results);
void write_bins_csv(std::ostream& out,
                    const std::vector<std::pair<std::string, std::vector<BinnedCell>>>& by_mode);
void write_lines_csv(std::ostream& out, const std::vector<GroupLine>& lines);

/// FNV-1a 64-bit content hash, used to fingerprint outputs in the manifest.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace poptrade

#endif  // POPTRADE_IO_HPP
