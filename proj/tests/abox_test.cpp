#include <doctest.h>

#include "cfgowl/abox.hpp"
#include "test_util.hpp"

using namespace cfgowl;

TEST_CASE("sequence assertions follow the position-suffixed naming") {
  Grammar g = testutil::load_fixture_grammar("binary_sum.cfg");
  ConversionConfig cfg;
  SequenceAbox abox = build_sequence_abox(testutil::split_tokens("1 + 0"), g, cfg);

  REQUIRE(abox.individuals.size() == 3);
  CHECK(abox.individuals[0].value == cfg.base.value + "#1_0");
  CHECK(abox.individuals[1].value == cfg.base.value + "#%2B_1");
  CHECK(abox.individuals[2].value == cfg.base.value + "#0_2");

  CHECK(abox.ontology.contains(
      {Axiom::ClassAssertion{ClassExpr::named(cfg.symbol_class("+")), abox.individuals[1]}}));
  CHECK(abox.ontology.contains({Axiom::ObjectPropertyAssertion{
      cfg.effective_next(), abox.individuals[0], abox.individuals[1]}}));
  CHECK(abox.ontology.contains({Axiom::ObjectPropertyAssertion{
      cfg.effective_next(), abox.individuals[1], abox.individuals[2]}}));
  // 3 declarations + 3 types + 2 links
  CHECK(count_axioms(abox.ontology) == 8);
}

TEST_CASE("a single-token sequence emits one individual and no links") {
  Grammar g = testutil::load_fixture_grammar("binary_sum.cfg");
  ConversionConfig cfg;
  SequenceAbox abox = build_sequence_abox({"1"}, g, cfg);
  CHECK(abox.individuals.size() == 1);
  CHECK(count_axioms(abox.ontology) == 2);
  for (const Axiom& a : abox.ontology.axioms())
    CHECK_FALSE(std::holds_alternative<Axiom::ObjectPropertyAssertion>(a.node));
}

TEST_CASE("unknown tokens are rejected") {
  Grammar g = testutil::load_fixture_grammar("binary_sum.cfg");
  CHECK_THROWS_AS(build_sequence_abox({"1", "?"}, g, ConversionConfig{}), InputError);
}

TEST_CASE("repeated tokens become distinct individuals forming a simple chain") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  ConversionConfig cfg;
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  SequenceAbox abox = build_sequence_abox(seq, g, cfg);

  std::set<std::string> distinct;
  for (const Iri& i : abox.individuals) distinct.insert(i.value);
  CHECK(distinct.size() == seq.size());  // duplicates position-suffixed apart

  // links form exactly the path 0 -> 1 -> ... -> n-1
  std::size_t links = 0;
  for (const Axiom& a : abox.ontology.axioms()) {
    if (const auto* pa = std::get_if<Axiom::ObjectPropertyAssertion>(&a.node)) {
      ++links;
      bool adjacent = false;
      for (std::size_t i = 0; i + 1 < abox.individuals.size(); ++i) {
        adjacent |= pa->subject == abox.individuals[i] && pa->object == abox.individuals[i + 1];
      }
      CHECK(adjacent);
    }
  }
  CHECK(links == seq.size() - 1);
  CHECK(count_axioms(abox.ontology) == 32);
}

TEST_CASE("tree axioms connect each leaf to all its variable ancestors") {
  Grammar g = testutil::load_fixture_grammar("binary_sum.cfg");
  ConversionConfig cfg;
  ParseTree t = parse(g, testutil::split_tokens("1 + 0"));
  Ontology o = parse_tree_to_axioms(t, cfg);

  auto subclass = [&](const std::string& sub, const std::string& sup) {
    return Axiom{Axiom::SubClassOf{ClassExpr::named(cfg.symbol_class(sub)),
                                   ClassExpr::named(cfg.symbol_class(sup))}};
  };
  CHECK(o.contains(subclass("+", "Plus")));
  CHECK(o.contains(subclass("+", "Expression_0")));
  CHECK(o.contains(subclass("+", "Expression")));
  CHECK(o.contains(subclass("1", "Expression")));
  CHECK(o.contains(subclass("0", "Expression")));
  CHECK_FALSE(o.contains(subclass("0", "Expression_0")));
}

TEST_CASE("a bare leaf yields no axioms") {
  ParseTree leaf{Symbol::terminal("x"), {}, 0, 1};
  CHECK(count_axioms(parse_tree_to_axioms(leaf, ConversionConfig{})) == 0);
}

TEST_CASE("tree axioms for a fixture segment") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  ConversionConfig cfg;
  ParseTree t = parse(g, testutil::split_tokens("C:min7 F:min7"), "OnOffMinorIV_Cm");
  Ontology o = parse_tree_to_axioms(t, cfg);
  auto subclass = [&](const std::string& sub, const std::string& sup) {
    return Axiom{Axiom::SubClassOf{ClassExpr::named(cfg.symbol_class(sub)),
                                   ClassExpr::named(cfg.symbol_class(sup))}};
  };
  CHECK(o.contains(subclass("C:min7", "MinorOn_Cm")));
  CHECK(o.contains(subclass("C:min7", "OnOffMinorIV_Cm")));
  CHECK(o.contains(subclass("F:min7", "Off_F")));
  CHECK(o.contains(subclass("F:min7", "OnOffMinorIV_Cm")));
  std::size_t subclass_count = 0;
  for (const Axiom& a : o.axioms())
    subclass_count += std::holds_alternative<Axiom::SubClassOf>(a.node);
  CHECK(subclass_count == 4);
}

TEST_CASE("tree axioms are a function of the tree alone") {
  Grammar g = testutil::load_fixture_grammar("binary_sum.cfg");
  ConversionConfig cfg;
  auto tokens = testutil::split_tokens("1 + 0");
  Ontology a = parse_tree_to_axioms(parse(g, tokens), cfg);
  Ontology b = parse_tree_to_axioms(parse(g, tokens), cfg);
  CHECK(a.size() == b.size());
  for (const Axiom& ax : a.axioms()) CHECK(b.contains(ax));
}

TEST_CASE("greedy segmentation covers the fixture tune as expected") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  Segmentation s = segment_parse(g, g.bricks, seq);

  REQUIRE(s.segments.size() == 4);
  std::vector<std::size_t> lengths;
  for (const ParseTree& t : s.segments) lengths.push_back(t.end - t.begin);
  CHECK(lengths == std::vector<std::size_t>{2, 3, 3, 3});
  CHECK(s.segments[0].label.text == "OnOffMinorIV_Cm");
  CHECK(s.segments[1].label.text == "SadCadence_Cm");
  CHECK(s.segments[2].label.text == "StraightCadence_Db");
  CHECK(s.segments[3].label.text == "SadCadence_Cm");
  CHECK(s.diagnostics.empty());
}

TEST_CASE("a fully derivable sequence is one segment") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  Segmentation s = segment_parse(g, g.bricks, testutil::split_tokens("C:min7 F:min7"));
  REQUIRE(s.segments.size() == 1);
  CHECK(s.segments[0].label.text == "OnOffMinorIV_Cm");
}

TEST_CASE("tokens no brick derives become bare leaves plus a warning") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  Segmentation s = segment_parse(g, g.bricks, testutil::split_tokens("G:7 G:7"));
  REQUIRE(s.segments.size() == 2);
  for (const ParseTree& t : s.segments) {
    CHECK(t.is_leaf());
    CHECK(t.label.is_terminal());
  }
  REQUIRE(s.diagnostics.size() == 1);
  CHECK(s.diagnostics[0].severity == Severity::Warning);
}

TEST_CASE("segment spans partition the input in order") {
  Grammar g = testutil::load_fixture_grammar("bluebossa.cfg");
  auto seq = testutil::load_fixture_sequence("bluebossa.seq");
  Segmentation s = segment_parse(g, g.bricks, seq);
  std::size_t cursor = 0;
  std::vector<std::string> all_leaves;
  for (const ParseTree& t : s.segments) {
    CHECK(t.begin == cursor);
    cursor = t.end;
    for (const std::string& tok : t.leaf_tokens()) all_leaves.push_back(tok);
  }
  CHECK(cursor == seq.size());
  CHECK(all_leaves == seq);
}
