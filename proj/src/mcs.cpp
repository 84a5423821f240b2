#include "sgsim/mcs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sgsim {

namespace {
// 15 entries, thresholds uniform from -6.0 to 19.8 dB, efficiencies from the
// standard LTE CQI set.
const char* kDefaultTableText =
    "# modulation and coding table\n"
    "# columns: sir_db efficiency (bit/s/Hz)\n"
    "-6.0000 0.1523\n"
    "-4.1571 0.2344\n"
    "-2.3143 0.3770\n"
    "-0.4714 0.6016\n"
    "1.3714 0.8770\n"
    "3.2143 1.1758\n"
    "5.0571 1.4766\n"
    "6.9000 1.9141\n"
    "8.7429 2.4063\n"
    "10.5857 2.7305\n"
    "12.4286 3.3223\n"
    "14.2714 3.9023\n"
    "16.1143 4.5234\n"
    "17.9571 5.1152\n"
    "19.8000 5.5547\n";
}  // namespace

McsTable::McsTable(std::vector<McsRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("McsTable: empty table");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].efficiency <= 0.0) {
      throw std::invalid_argument("McsTable: efficiencies must be positive");
    }
    if (i > 0 && (rows_[i].sir_db <= rows_[i - 1].sir_db ||
                  rows_[i].efficiency <= rows_[i - 1].efficiency)) {
      throw std::invalid_argument(
          "McsTable: rows must be strictly increasing in threshold and efficiency");
    }
  }
}

const McsTable& McsTable::default_table() {
  static const McsTable table = McsTable::parse(kDefaultTableText);
  return table;
}

const char* McsTable::default_text() { return kDefaultTableText; }

McsTable McsTable::parse(const std::string& text) {
  std::vector<McsRow> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double sir, eff;
    if (!(ls >> sir)) continue;  // blank or comment-only line
    if (!(ls >> eff)) {
      throw std::invalid_argument("McsTable: missing efficiency on line " +
                                  std::to_string(lineno));
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("McsTable: trailing token on line " +
                                  std::to_string(lineno));
    }
    rows.push_back({sir, eff});
  }
  return McsTable(std::move(rows));
}

McsTable McsTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("McsTable: cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

double McsTable::efficiency_at_db(double sir_db) const {
  if (std::isnan(sir_db) || sir_db < rows_.front().sir_db) return 0.0;
  auto it = std::upper_bound(
      rows_.begin(), rows_.end(), sir_db,
      [](double v, const McsRow& row) { return v < row.sir_db; });
  return std::prev(it)->efficiency;
}

double McsTable::efficiency_at(double sir_linear) const {
  if (sir_linear <= 0.0) return 0.0;
  return efficiency_at_db(10.0 * std::log10(sir_linear));
}

}  // namespace sgsim
