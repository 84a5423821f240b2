#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sgsim/mcs.hpp"

using namespace sgsim;

TEST_CASE("default table shape and endpoints") {
  const McsTable& t = McsTable::default_table();
  REQUIRE(t.rows().size() == 15);
  CHECK(t.floor_db() == -6.0);
  CHECK(t.rows().back().sir_db == 19.8);
  CHECK(t.peak_efficiency() == 5.5547);
  CHECK(t.rows().front().efficiency == 0.1523);
}

TEST_CASE("lookup: floor inclusive, step function, peak saturation") {
  const McsTable& t = McsTable::default_table();
  CHECK(t.efficiency_at_db(-6.0) == 0.1523);
  CHECK(t.efficiency_at_db(-6.0001) == 0.0);
  CHECK(t.efficiency_at_db(-30.0) == 0.0);
  CHECK(t.efficiency_at_db(-4.1571) == 0.2344);
  CHECK(t.efficiency_at_db(-4.16) == 0.1523);  // just below the second row
  CHECK(t.efficiency_at_db(0.0) == 0.6016);
  CHECK(t.efficiency_at_db(19.8) == 5.5547);
  CHECK(t.efficiency_at_db(55.0) == 5.5547);
  CHECK(t.efficiency_at_db(std::nan("")) == 0.0);
}

TEST_CASE("linear-domain lookup matches the dB domain") {
  const McsTable& t = McsTable::default_table();
  CHECK(t.efficiency_at(1.0) == t.efficiency_at_db(0.0));
  CHECK(t.efficiency_at(100.0) == t.efficiency_at_db(20.0));
  CHECK(t.efficiency_at(0.0) == 0.0);
  CHECK(t.efficiency_at(-3.0) == 0.0);
}

TEST_CASE("parser: comments, blanks, and the shipped default text") {
  McsTable t = McsTable::parse("# c\n\n-2.0 0.5 # inline\n\n1.0 2.0\n");
  REQUIRE(t.rows().size() == 2);
  CHECK(t.efficiency_at_db(0.0) == 0.5);
  CHECK(t.efficiency_at_db(1.5) == 2.0);

  McsTable d = McsTable::parse(McsTable::default_text());
  REQUIRE(d.rows().size() == McsTable::default_table().rows().size());
  for (std::size_t i = 0; i < d.rows().size(); ++i) {
    CHECK(d.rows()[i].sir_db == McsTable::default_table().rows()[i].sir_db);
    CHECK(d.rows()[i].efficiency ==
          McsTable::default_table().rows()[i].efficiency);
  }
}

TEST_CASE("shipped data file equals the built-in table") {
  McsTable t = McsTable::load(std::string(SGSIM_DATA_DIR) + "/mcs_default.txt");
  REQUIRE(t.rows().size() == 15);
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    CHECK(t.rows()[i].sir_db == McsTable::default_table().rows()[i].sir_db);
    CHECK(t.rows()[i].efficiency ==
          McsTable::default_table().rows()[i].efficiency);
  }
}

TEST_CASE("parser rejects malformed tables") {
  CHECK_THROWS_WITH_AS(McsTable::parse("1.0\n"),
                       "McsTable: missing efficiency on line 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(McsTable::parse("# ok\n1.0 0.5 junk\n"),
                       "McsTable: trailing token on line 2",
                       std::invalid_argument);
  CHECK_THROWS_AS(McsTable::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(McsTable::parse("1.0 0.5\n0.5 0.7\n"), std::invalid_argument);
  CHECK_THROWS_AS(McsTable::parse("1.0 0.5\n2.0 0.4\n"), std::invalid_argument);
  CHECK_THROWS_AS(McsTable::parse("1.0 -0.5\n"), std::invalid_argument);
  CHECK_THROWS_AS(McsTable::load("/nonexistent/mcs.txt"), std::runtime_error);
}
