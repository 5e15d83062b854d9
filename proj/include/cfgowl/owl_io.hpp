#pragma once

#include <string>

#include "cfgowl/owl.hpp"

namespace cfgowl {

// Manchester frames, one per entity occurrence, in first-emission order.
// Rolification renders as `EquivalentTo: R some Self`; general class
// inclusions with a complex left side render as standalone
// `(...) SubClassOf: ...` statements. Byte-identical across runs.
std::string serialize_manchester(const Ontology& o);

// Turtle with the standard OWL vocabulary (hasSelf restrictions,
// propertyChainAxiom lists, unionOf/intersectionOf lists). One statement per
// axiom, in emission order, blank nodes inline. Byte-identical across runs.
std::string serialize_turtle(const Ontology& o);

// Reads the Turtle subset the serializer emits, plus plain rdfs:subClassOf
// alignment files. Axioms are reconstructed in document order.
Ontology read_turtle(const std::string& text);

}  // namespace cfgowl
