#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "sgsim/config.hpp"

using namespace sgsim;

namespace {
const char* kSample =
    "# top comment\n"
    "title = demo run   # inline comment\n"
    "\n"
    "[experiment]\n"
    "drops = 200\n"
    "scale = 2.5e-3\n"
    "activities = 0.05, 0.1, 0.2\n"
    "paired = yes\n"
    "\n"
    "[output]\n"
    "path = out.csv\n";
}

TEST_CASE("parser: sections, comments, whitespace") {
  Config c = Config::parse(kSample);
  CHECK(c.get_string("", "title") == "demo run");
  CHECK(c.get_u64("experiment", "drops") == 200);
  CHECK(c.get_double("experiment", "scale") == 2.5e-3);
  CHECK(c.get_bool("experiment", "paired"));
  CHECK(c.get_string("output", "path") == "out.csv");
  const std::vector<double> acts = c.get_doubles("experiment", "activities");
  REQUIRE(acts.size() == 3);
  CHECK(acts[0] == 0.05);
  CHECK(acts[2] == 0.2);
  CHECK(c.has("experiment", "drops"));
  CHECK_FALSE(c.has("experiment", "nonesuch"));
  CHECK_FALSE(c.has("nonesuch", "drops"));

  Config padded = Config::parse("  key   =   spaced value  \n");
  CHECK(padded.get_string("", "key") == "spaced value");
}

TEST_CASE("fallbacks apply only when the key is absent") {
  Config c = Config::parse(kSample);
  CHECK(c.get_u64("experiment", "drops", 7) == 200);
  CHECK(c.get_u64("experiment", "warmup", 7) == 7);
  CHECK(c.get_double("experiment", "missing", 1.5) == 1.5);
  CHECK(c.get_string("output", "format", "csv") == "csv");
  CHECK(c.get_bool("experiment", "verbose", false) == false);
  const std::vector<double> fb = {9.0};
  CHECK(c.get_doubles("experiment", "missing", fb) == fb);
  CHECK(c.get_doubles("experiment", "activities", fb).size() == 3);
}

TEST_CASE("boolean spellings") {
  Config c = Config::parse("a = true\nb = OFF\nc = 1\nd = No\n");
  CHECK(c.get_bool("", "a"));
  CHECK_FALSE(c.get_bool("", "b"));
  CHECK(c.get_bool("", "c"));
  CHECK_FALSE(c.get_bool("", "d"));
  Config bad = Config::parse("a = maybe\n");
  CHECK_THROWS_AS(bad.get_bool("", "a"), std::runtime_error);
}

TEST_CASE("malformed input reports the line") {
  CHECK_THROWS_WITH_AS(Config::parse("ok = 1\nbroken line\n"),
                       "config line 2: expected 'key = value'",
                       std::runtime_error);
  CHECK_THROWS_AS(Config::parse("[unclosed\n"), std::runtime_error);
  CHECK_THROWS_AS(Config::parse("[]\n"), std::runtime_error);
  CHECK_THROWS_AS(Config::parse("= 3\n"), std::runtime_error);
  CHECK_THROWS_AS(Config::parse("[s]\nk = 1\nk = 2\n"), std::runtime_error);
  // same key in different sections is fine
  Config ok = Config::parse("[a]\nk = 1\n[b]\nk = 2\n");
  CHECK(ok.get_u64("a", "k") == 1);
  CHECK(ok.get_u64("b", "k") == 2);
}

TEST_CASE("typed getters reject junk values") {
  Config c = Config::parse("n = 12x\nx = 1..5\nneg = -4\nlist = 1,,3\n");
  CHECK_THROWS_AS(c.get_u64("", "n"), std::runtime_error);
  CHECK_THROWS_AS(c.get_double("", "x"), std::runtime_error);
  CHECK_THROWS_AS(c.get_u64("", "neg"), std::runtime_error);
  CHECK(c.get_double("", "neg") == -4.0);
  CHECK_THROWS_AS(c.get_doubles("", "list"), std::runtime_error);
  CHECK_THROWS_AS(c.get_string("", "absent"), std::runtime_error);
}

TEST_CASE("serialization round trips exactly") {
  Config c = Config::parse(kSample);
  Config back = Config::parse(c.serialize());
  CHECK(back.sections() == c.sections());
  CHECK(Config::parse(back.serialize()).sections() == back.sections());

  Config empty = Config::parse("");
  CHECK(Config::parse(empty.serialize()).sections() == empty.sections());

  Config odd = Config::parse("k = a = b\n[s]\nempty =\n[t]\n");
  Config odd_back = Config::parse(odd.serialize());
  CHECK(odd_back.sections() == odd.sections());
  CHECK(odd_back.get_string("", "k") == "a = b");
  CHECK(odd_back.get_string("s", "empty").empty());
}

TEST_CASE("load reads files and rejects missing paths") {
  CHECK_THROWS_AS(Config::load("/nonexistent/x.cfg"), std::runtime_error);
}

TEST_CASE("shipped example configs stay parseable") {
  const std::string dir = SGSIM_CONFIG_DIR;
  Config z = Config::load(dir + "/zone.cfg");
  CHECK(z.get_doubles("zone", "r_list").size() == 8);
  CHECK(z.get_double("zone", "fraction") == 0.01);
  CHECK(Config::parse(z.serialize()).sections() == z.sections());

  Config d = Config::load(dir + "/density.cfg");
  CHECK(d.get_doubles("density", "chis").size() == 3);
  CHECK(d.get_u64("density", "campaigns") == 300);

  Config t = Config::load(dir + "/throughput.cfg");
  CHECK(t.get_double("throughput", "eps_db") == -6.0);
  CHECK(t.get_u64("throughput", "drops") == 200);
  CHECK(Config::parse(t.serialize()).sections() == t.sections());
}
