#include <doctest.h>

#include "cfgowl/owl_io.hpp"
#include "cfgowl/pipeline.hpp"
#include "test_util.hpp"

using namespace cfgowl;

TEST_CASE("component axiom counts add up to the expected total") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  ModeResult result = run(g, seq, Mode::Dl, g.bricks, ConversionConfig{});

  CHECK(result.tbox_axioms == 132);
  CHECK(result.abox_axioms == 32);
  CHECK(result.alignment_axioms == 0);
  std::size_t total = result.total_axioms();
  CHECK(total == 164);
  CHECK(total >= 128);  // 159 within 20%, rounded inward
  CHECK(total <= 190);
  CHECK(result.elapsed_ms >= 0.0);
}

TEST_CASE("run is a pure composition of the classify entry points") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  ConversionConfig cfg;

  ModeResult dl = run(g, seq, Mode::Dl, g.bricks, cfg);
  CHECK(report_to_json(dl.report) == report_to_json(classify_dl(g, seq, cfg)));

  ModeResult hybrid = run(g, seq, Mode::Hybrid, g.bricks, cfg);
  CHECK(report_to_json(hybrid.report) == report_to_json(classify_hybrid(g, g.bricks, seq, cfg)));
  CHECK(hybrid.tbox_axioms > 0);
  CHECK(hybrid.abox_axioms == 32);
}

TEST_CASE("alignment axioms are counted as their own component") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  ClassifyOptions opts;
  opts.alignments.push_back(read_turtle(testutil::slurp(testutil::fixture_path("mto_align.ttl"))));
  ModeResult result = run(g, seq, Mode::Dl, g.bricks, ConversionConfig{}, opts);
  CHECK(result.alignment_axioms == 10);
  CHECK(result.total_axioms() == 132 + 32 + 10);
}

TEST_CASE("the whole-sequence class appears on every position of the worked example") {
  Grammar g = testutil::load_fixture_grammar("binary_sum.cfg");
  ModeResult result =
      run(g, testutil::split_tokens("1 + 0"), Mode::Dl, {}, ConversionConfig{});
  REQUIRE(result.report.rows.size() == 3);
  for (const ReportRow& row : result.report.rows) CHECK(row.has_class_display("Expression"));
}

TEST_CASE("hybrid report stays inside the DL report minus scaffolding") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  ConversionConfig cfg;
  ModeResult dl = run(g, seq, Mode::Dl, g.bricks, cfg);
  ModeResult hybrid = run(g, seq, Mode::Hybrid, g.bricks, cfg);
  REQUIRE(dl.report.rows.size() == hybrid.report.rows.size());
  for (std::size_t i = 0; i < dl.report.rows.size(); ++i) {
    std::set<std::string> dl_set;
    for (const ClassName& c : dl.report.rows[i].classes) {
      if (c.display != "VariableOne" && c.display != "VariableTwo") dl_set.insert(c.display);
    }
    for (const ClassName& c : hybrid.report.rows[i].classes) CHECK(dl_set.count(c.display) == 1);
  }
}

TEST_CASE("reports and conversions match the versioned goldens") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  ConversionConfig cfg;

  CHECK(report_to_json(classify_dl(g, seq, cfg)) ==
        testutil::slurp(testutil::fixture_path("expected/bluebossa_dl.json")));
  CHECK(report_to_json(classify_hybrid(g, g.bricks, seq, cfg)) ==
        testutil::slurp(testutil::fixture_path("expected/bluebossa_hybrid.json")));

  ClassifyOptions opts;
  opts.alignments.push_back(read_turtle(testutil::slurp(testutil::fixture_path("mto_align.ttl"))));
  CHECK(report_to_json(classify_dl(g, seq, cfg, opts)) ==
        testutil::slurp(testutil::fixture_path("expected/bluebossa_mto_dl.json")));

  CHECK(serialize_turtle(convert(g, cfg)) ==
        testutil::slurp(testutil::fixture_path("expected/bluebossa.ttl")));
}
