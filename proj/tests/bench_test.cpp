#include <doctest.h>

#include "cfgowl/bench.hpp"
#include "cfgowl/convert.hpp"
#include "test_util.hpp"

using namespace cfgowl;

TEST_CASE("growth is deterministic in (seed, iteration)") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  GrowthConfig cfg;
  cfg.seed = 42;
  Grammar a = grow_grammar(g, cfg, 1);
  Grammar b = grow_grammar(g, cfg, 1);
  CHECK(serialize_grammar(a) == serialize_grammar(b));

  GrowthConfig other = cfg;
  other.seed = 43;
  CHECK(serialize_grammar(grow_grammar(g, other, 1)) != serialize_grammar(a));
}

TEST_CASE("one growth step adds exactly `step` new variables") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  GrowthConfig cfg;
  Grammar grown = grow_grammar(g, cfg, 1);
  CHECK(grown.variables.size() == g.variables.size() + 5);
  CHECK(grown.productions.size() > g.productions.size());
  CHECK(grown.is_relaxed_cnf());
  // the original rules survive untouched
  for (std::size_t i = 0; i < g.productions.size(); ++i)
    CHECK(grown.productions[i] == g.productions[i]);
}

TEST_CASE("grown rules stay disconnected from the original grammar") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  GrowthConfig cfg;
  Grammar grown = grow_grammar(grow_grammar(g, cfg, 1), cfg, 2);
  for (std::size_t i = g.productions.size(); i < grown.productions.size(); ++i) {
    const Production& p = grown.productions[i];
    CHECK(p.lhs.starts_with("N"));
    for (const Symbol& s : p.rhs) {
      bool generated = s.is_variable() ? s.text.starts_with("N") : s.text.starts_with("n");
      CHECK(generated);
    }
  }
}

TEST_CASE("classification is unchanged while the grammar grows") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  ConversionConfig ccfg;
  GrowthConfig gcfg;

  std::string baseline = report_to_json(classify_dl(g, seq, ccfg));
  std::string hybrid_baseline = report_to_json(classify_hybrid(g, g.bricks, seq, ccfg));
  Grammar current = g;
  for (std::size_t iteration = 1; iteration <= 3; ++iteration) {
    current = grow_grammar(current, gcfg, iteration);
    CHECK(report_to_json(classify_dl(current, seq, ccfg)) == baseline);
    CHECK(report_to_json(classify_hybrid(current, g.bricks, seq, ccfg)) == hybrid_baseline);
  }
}

TEST_CASE("bench rows: baseline only when iterations is zero") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  GrowthConfig gcfg;
  gcfg.iterations = 0;
  auto rows = run_bench(g, seq, g.bricks, gcfg, ConversionConfig{});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].iteration == 0);
  CHECK(rows[0].productions_total == g.productions.size());
  CHECK(rows[0].axioms_total == 132 + 32);
}

TEST_CASE("bench rows grow monotonically and serialize with the fixed header") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  GrowthConfig gcfg;
  gcfg.iterations = 3;
  auto rows = run_bench(g, seq, g.bricks, gcfg, ConversionConfig{});
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].axioms_total > rows[i - 1].axioms_total);
    CHECK(rows[i].productions_total > rows[i - 1].productions_total);
  }
  std::string csv = rows_to_csv(rows);
  CHECK(csv.starts_with("iteration,productions_total,axioms_total,dl_time_ms,hybrid_time_ms\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
