#pragma once

#include <string>
#include <vector>

namespace sgsim {

// Link adaptation table: SIR threshold (dB) to spectral efficiency
// (bit/s/Hz). A transmission at SIR x uses the highest row whose threshold
// does not exceed x; below the first row the link carries nothing.

struct McsRow {
  double sir_db;
  double efficiency;
};

class McsTable {
 public:
  explicit McsTable(std::vector<McsRow> rows);

  // 15-row table spanning -6.0 .. 19.8 dB with standard LTE CQI efficiencies.
  static const McsTable& default_table();

  // Parses the plain-text format: two columns `sir_db efficiency`,
  // '#' starts a comment, blank lines ignored. Rows must be strictly
  // increasing in both columns.
  static McsTable parse(const std::string& text);
  static McsTable load(const std::string& path);

  // The canonical text of the default table (also shipped as a data file).
  static const char* default_text();

  double efficiency_at_db(double sir_db) const;
  double efficiency_at(double sir_linear) const;

  const std::vector<McsRow>& rows() const { return rows_; }
  double floor_db() const { return rows_.front().sir_db; }
  double peak_efficiency() const { return rows_.back().efficiency; }

 private:
  std::vector<McsRow> rows_;
};

}  // namespace sgsim
