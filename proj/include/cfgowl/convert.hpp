#pragma once

#include "cfgowl/grammar.hpp"
#include "cfgowl/owl.hpp"

namespace cfgowl {

// Naming scheme and knobs for grammar-to-ontology conversion. Entities live
// under `<base>#<local>` with percent-encoded locals; the rolification
// property of a class with local name X is `R_<X>`.
struct ConversionConfig {
  Iri base{"http://example.org/grammar"};
  Iri next_property{};  // empty: <base>#directlyPrecedes
  bool include_inverse_chains = true;

  Iri effective_next() const {
    return next_property.value.empty() ? entity("directlyPrecedes") : next_property;
  }

  // `local` is appended verbatim; callers encode symbol text first.
  Iri entity(const std::string& local) const { return Iri(base.value + "#" + local); }

  Iri symbol_class(const std::string& symbol_text) const {
    return entity(percent_encode(symbol_text));
  }
  Iri symbol_property(const std::string& symbol_text) const {
    return entity("R_" + percent_encode(symbol_text));
  }

  // Rolification property for an arbitrary class: R_<local> under our base.
  Iri rolification_property(const Iri& cls) const { return entity("R_" + cls.local_name()); }

  Iri scaffold_property_one() const { return entity("R_1"); }
  Iri scaffold_property_two() const { return entity("R_2"); }
  Iri scaffold_class_one() const { return entity("VariableOne"); }
  Iri scaffold_class_two() const { return entity("VariableTwo"); }
};

// Converts a relaxed-CNF grammar to its ontology: scaffolding, one rolified
// class per symbol, two property chains plus a general inclusion per binary
// production, one subclass axiom per terminal production. Linear in
// |V| + |Sigma| + |R|.
Ontology convert(const Grammar& g, const ConversionConfig& cfg);

// Standalone adjacency rule: "an element of classA directly followed by an
// element of classB marks a ruleClass boundary". Emits rolifications for
// both classes, the two chains, and the inclusion
// (classA and VariableOne) or (classB and VariableTwo) SubClassOf ruleClass,
// plus the scaffolding needed to stand alone.
Ontology make_rule(const Iri& class_a, const Iri& class_b, const Iri& rule_class,
                   const ConversionConfig& cfg);

}  // namespace cfgowl
