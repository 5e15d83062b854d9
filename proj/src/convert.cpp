#include "cfgowl/convert.hpp"

namespace cfgowl {

namespace {

void emit_scaffolding(Ontology& o, const ConversionConfig& cfg) {
  o.add({Axiom::Declaration{EntityKind::ObjectProperty, cfg.scaffold_property_one()}});
  o.add({Axiom::Declaration{EntityKind::ObjectProperty, cfg.scaffold_property_two()}});
  o.add({Axiom::Declaration{EntityKind::ObjectProperty, cfg.effective_next()}});
  o.add({Axiom::Declaration{EntityKind::Class, cfg.scaffold_class_one()}});
  o.add({Axiom::EquivalentClasses{
      ClassExpr::named(cfg.scaffold_class_one()),
      ClassExpr::some_values_from(cfg.scaffold_property_one(), ClassExpr::thing())}});
  o.add({Axiom::Declaration{EntityKind::Class, cfg.scaffold_class_two()}});
  o.add({Axiom::EquivalentClasses{
      ClassExpr::named(cfg.scaffold_class_two()),
      ClassExpr::some_values_from(cfg.scaffold_property_two(), ClassExpr::thing())}});
}

void emit_rolified_class(Ontology& o, const Iri& cls, const Iri& prop) {
  o.add({Axiom::Declaration{EntityKind::ObjectProperty, prop}});
  o.add({Axiom::Declaration{EntityKind::Class, cls}});
  o.add({Axiom::EquivalentClasses{ClassExpr::named(cls), ClassExpr::has_self(prop)}});
}

void emit_adjacency_rule(Ontology& o, const ConversionConfig& cfg, const Iri& class_a,
                         const Iri& prop_a, const Iri& class_b, const Iri& prop_b,
                         const Iri& head_class) {
  o.add({Axiom::SubPropertyChainOf{
      {{prop_a, false}, {cfg.effective_next(), false}, {prop_b, false}},
      cfg.scaffold_property_one()}});
  if (cfg.include_inverse_chains) {
    o.add({Axiom::SubPropertyChainOf{
        {{prop_b, false}, {cfg.effective_next(), true}, {prop_a, false}},
        cfg.scaffold_property_two()}});
  }
  o.add({Axiom::SubClassOf{
      ClassExpr::union_of(
          {ClassExpr::intersection_of({ClassExpr::named(class_a),
                                       ClassExpr::named(cfg.scaffold_class_one())}),
           ClassExpr::intersection_of({ClassExpr::named(class_b),
                                       ClassExpr::named(cfg.scaffold_class_two())})}),
      ClassExpr::named(head_class)}});
}

}  // namespace

Ontology convert(const Grammar& g, const ConversionConfig& cfg) {
  g.check();
  if (!g.is_relaxed_cnf()) throw InputError("grammar not in relaxed CNF");

  Ontology o(cfg.base);
  emit_scaffolding(o, cfg);

  for (const std::string& v : g.variables)
    emit_rolified_class(o, cfg.symbol_class(v), cfg.symbol_property(v));
  for (const std::string& t : g.terminals)
    emit_rolified_class(o, cfg.symbol_class(t), cfg.symbol_property(t));

  for (const Production& p : g.productions) {
    if (p.is_terminal_rule()) {
      o.add({Axiom::SubClassOf{ClassExpr::named(cfg.symbol_class(p.rhs[0].text)),
                               ClassExpr::named(cfg.symbol_class(p.lhs))}});
    } else {
      emit_adjacency_rule(o, cfg, cfg.symbol_class(p.rhs[0].text),
                          cfg.symbol_property(p.rhs[0].text), cfg.symbol_class(p.rhs[1].text),
                          cfg.symbol_property(p.rhs[1].text), cfg.symbol_class(p.lhs));
    }
  }
  return o;
}

Ontology make_rule(const Iri& class_a, const Iri& class_b, const Iri& rule_class,
                   const ConversionConfig& cfg) {
  Ontology o(cfg.base);
  emit_scaffolding(o, cfg);

  Iri prop_a = cfg.rolification_property(class_a);
  Iri prop_b = cfg.rolification_property(class_b);
  emit_rolified_class(o, class_a, prop_a);
  emit_rolified_class(o, class_b, prop_b);
  o.add({Axiom::Declaration{EntityKind::Class, rule_class}});
  emit_adjacency_rule(o, cfg, class_a, prop_a, class_b, prop_b, rule_class);
  return o;
}

}  // namespace cfgowl
