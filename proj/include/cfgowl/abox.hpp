#pragma once

#include "cfgowl/convert.hpp"
#include "cfgowl/grammar.hpp"
#include "cfgowl/owl.hpp"
#include "cfgowl/parser.hpp"

namespace cfgowl {

// A sequence rendered as assertions: one individual per position (IRI local
// `<token>_<i>`, so repeated tokens stay distinct), each typed with its
// terminal class and linked to its successor by the next property.
struct SequenceAbox {
  Ontology ontology;
  std::vector<Iri> individuals;     // in sequence order
  std::vector<std::string> tokens;  // same length
};

SequenceAbox build_sequence_abox(const std::vector<std::string>& tokens, const Grammar& g,
                                 const ConversionConfig& cfg);

// Ontology-only view of the above.
Ontology sequence_to_abox(const std::vector<std::string>& tokens, const Grammar& g,
                          const ConversionConfig& cfg);

// For each terminal leaf and each variable ancestor: C_leaf SubClassOf C_ancestor,
// duplicates suppressed. A bare leaf yields nothing.
Ontology parse_tree_to_axioms(const ParseTree& tree, const ConversionConfig& cfg);

// Greedy left-to-right cover of the sequence by brick-derivable segments:
// at each position the longest derivable prefix wins, ties broken by the
// bricks' grammar order. Tokens no brick can derive become bare leaf
// segments and produce a warning.
struct Segmentation {
  std::vector<ParseTree> segments;
  std::vector<Diagnostic> diagnostics;
};

Segmentation segment_parse(const Grammar& g, const std::vector<std::string>& brick_vars,
                           const std::vector<std::string>& tokens);

}  // namespace cfgowl
