#include <algorithm>

#include "cfgowl/abox.hpp"

namespace cfgowl {

SequenceAbox build_sequence_abox(const std::vector<std::string>& tokens, const Grammar& g,
                                 const ConversionConfig& cfg) {
  g.check();
  SequenceAbox out;
  out.ontology.set_base(cfg.base);
  out.tokens = tokens;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!g.is_terminal(tokens[i]))
      throw InputError("token \"" + tokens[i] + "\" at position " + std::to_string(i) +
                       " is not a terminal of the grammar");
    Iri individual = cfg.entity(percent_encode(tokens[i]) + "_" + std::to_string(i));
    out.individuals.push_back(individual);
    out.ontology.add({Axiom::Declaration{EntityKind::NamedIndividual, individual}});
    out.ontology.add(
        {Axiom::ClassAssertion{ClassExpr::named(cfg.symbol_class(tokens[i])), individual}});
  }
  // a length-1 sequence emits one individual and no links
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    out.ontology.add({Axiom::ObjectPropertyAssertion{cfg.effective_next(), out.individuals[i],
                                                     out.individuals[i + 1]}});
  }
  return out;
}

Ontology sequence_to_abox(const std::vector<std::string>& tokens, const Grammar& g,
                          const ConversionConfig& cfg) {
  return build_sequence_abox(tokens, g, cfg).ontology;
}

namespace {

void collect_leaf_axioms(const ParseTree& node, std::vector<Iri>& ancestors, Ontology& out,
                         const ConversionConfig& cfg) {
  if (node.is_leaf()) {
    if (!node.label.is_terminal()) return;
    Iri leaf_class = cfg.symbol_class(node.label.text);
    if (ancestors.empty()) return;
    out.add({Axiom::Declaration{EntityKind::Class, leaf_class}});
    for (const Iri& a : ancestors) {
      out.add({Axiom::Declaration{EntityKind::Class, a}});
      out.add({Axiom::SubClassOf{ClassExpr::named(leaf_class), ClassExpr::named(a)}});
    }
    return;
  }
  ancestors.push_back(cfg.symbol_class(node.label.text));
  for (const ParseTree& child : node.children) collect_leaf_axioms(child, ancestors, out, cfg);
  ancestors.pop_back();
}

}  // namespace

Ontology parse_tree_to_axioms(const ParseTree& tree, const ConversionConfig& cfg) {
  Ontology out(cfg.base);
  std::vector<Iri> ancestors;
  collect_leaf_axioms(tree, ancestors, out, cfg);
  return out;
}

Segmentation segment_parse(const Grammar& g, const std::vector<std::string>& brick_vars,
                           const std::vector<std::string>& tokens) {
  g.check();
  Segmentation out;
  if (tokens.empty()) return out;

  // Bricks ordered as the grammar declares them.
  std::vector<std::string> bricks = brick_vars;
  for (const std::string& b : bricks) {
    if (!g.is_variable(b)) throw InputError("brick '" + b + "' is not a variable");
  }
  std::sort(bricks.begin(), bricks.end(), [&](const std::string& a, const std::string& b) {
    return g.variable_index(a) < g.variable_index(b);
  });
  bricks.erase(std::unique(bricks.begin(), bricks.end()), bricks.end());

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!g.is_terminal(tokens[i]))
      throw InputError("token \"" + tokens[i] + "\" at position " + std::to_string(i) +
                       " is not a terminal of the grammar");
  }

  SpanTable table(g, tokens, bricks);
  const std::size_t n = tokens.size();
  std::size_t pos = 0;
  bool uncovered = false;
  while (pos < n) {
    std::size_t best_len = 0;
    const std::string* best_brick = nullptr;
    for (std::size_t len = n - pos; len >= 1 && best_len == 0; --len) {
      for (const std::string& b : bricks) {
        if (table.derivable(b, pos, pos + len)) {
          best_len = len;
          best_brick = &b;
          break;
        }
      }
    }
    if (best_brick != nullptr) {
      out.segments.push_back(table.tree(*best_brick, pos, pos + best_len));
      pos += best_len;
    } else {
      // bare leaf segment: the token carries no ancestors
      out.segments.push_back({Symbol::terminal(tokens[pos]), {}, pos, pos + 1});
      uncovered = true;
      ++pos;
    }
  }
  if (uncovered) {
    out.diagnostics.push_back(
        {Severity::Warning, "sequence not fully covered by bricks; uncovered tokens kept as bare leaves"});
  }
  return out;
}

}  // namespace cfgowl
