#include <sstream>

#include "cfgowl/owl_io.hpp"

namespace cfgowl {

namespace {

constexpr const char* kOwlNs = "http://www.w3.org/2002/07/owl#";

// PN_LOCAL-safe subset: what percent_encode produces, minus '~' (not a
// Turtle name character) and minus a trailing '.'.
bool prefixed_name_safe(const std::string& local) {
  if (local.empty() || local.back() == '.') return false;
  for (char c : local) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
              c == '%';
    if (!ok) return false;
  }
  return true;
}

class NameTable {
 public:
  explicit NameTable(const Ontology& o) {
    if (!o.base().value.empty()) base_ = o.base().value + "#";
    for (const auto& [prefix, ns] : o.prefixes()) prefixes_.emplace_back(prefix, ns);
  }

  std::string operator()(const Iri& iri) const {
    if (!base_.empty() && iri.value.starts_with(base_)) {
      std::string local = iri.value.substr(base_.size());
      if (prefixed_name_safe(local)) return ":" + local;
    }
    for (const auto& [prefix, ns] : prefixes_) {
      if (iri.value.starts_with(ns)) {
        std::string local = iri.value.substr(ns.size());
        if (prefixed_name_safe(local)) return prefix + ":" + local;
      }
    }
    return "<" + iri.value + ">";
  }

 private:
  std::string base_;
  std::vector<std::pair<std::string, std::string>> prefixes_;
};

struct TurtleWriter {
  const NameTable& name;
  std::ostringstream out;

  std::string expr(const ClassExpr& e) {
    std::ostringstream os;
    if (const auto* n = std::get_if<ClassExpr::Named>(&e.node)) {
      os << name(n->iri);
    } else if (std::holds_alternative<ClassExpr::Thing>(e.node)) {
      os << "owl:Thing";
    } else if (const auto* h = std::get_if<ClassExpr::HasSelf>(&e.node)) {
      os << "[ a owl:Restriction ; owl:onProperty " << name(h->property)
         << " ; owl:hasSelf true ]";
    } else if (const auto* s = std::get_if<ClassExpr::SomeValuesFrom>(&e.node)) {
      os << "[ a owl:Restriction ; owl:onProperty " << name(s->property)
         << " ; owl:someValuesFrom " << expr(*s->filler) << " ]";
    } else if (const auto* i = std::get_if<ClassExpr::IntersectionOf>(&e.node)) {
      os << "[ a owl:Class ; owl:intersectionOf (";
      for (const ClassExpr& op : i->operands) os << " " << expr(op);
      os << " ) ]";
    } else if (const auto* u = std::get_if<ClassExpr::UnionOf>(&e.node)) {
      os << "[ a owl:Class ; owl:unionOf (";
      for (const ClassExpr& op : u->operands) os << " " << expr(op);
      os << " ) ]";
    }
    return os.str();
  }

  void operator()(const Axiom::Declaration& d) {
    const char* kind = d.kind == EntityKind::Class               ? "owl:Class"
                       : d.kind == EntityKind::ObjectProperty    ? "owl:ObjectProperty"
                                                                 : "owl:NamedIndividual";
    out << name(d.entity) << " a " << kind << " .\n";
  }

  void operator()(const Axiom::SubClassOf& s) {
    out << expr(s.sub) << " rdfs:subClassOf " << expr(s.sup) << " .\n";
  }

  void operator()(const Axiom::EquivalentClasses& e) {
    out << expr(e.lhs) << " owl:equivalentClass " << expr(e.rhs) << " .\n";
  }

  void operator()(const Axiom::SubPropertyChainOf& c) {
    out << name(c.super) << " owl:propertyChainAxiom (";
    for (const PropertyTerm& t : c.chain) {
      if (t.inverse)
        out << " [ owl:inverseOf " << name(t.property) << " ]";
      else
        out << " " << name(t.property);
    }
    out << " ) .\n";
  }

  void operator()(const Axiom::ClassAssertion& a) {
    out << name(a.individual) << " a " << expr(a.type) << " .\n";
  }

  void operator()(const Axiom::ObjectPropertyAssertion& a) {
    out << name(a.subject) << " " << name(a.property) << " " << name(a.object) << " .\n";
  }
};

}  // namespace

std::string serialize_turtle(const Ontology& o) {
  NameTable name(o);
  TurtleWriter writer{name, {}};

  if (!o.base().value.empty())
    writer.out << "@prefix : <" << o.base().value << "#> .\n";
  writer.out << "@prefix owl: <" << kOwlNs << "> .\n";
  writer.out << "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n";
  writer.out << "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";
  for (const auto& [prefix, ns] : o.prefixes())
    writer.out << "@prefix " << prefix << ": <" << ns << "> .\n";
  writer.out << "\n";
  if (!o.base().value.empty()) writer.out << "<" << o.base().value << "> a owl:Ontology .\n\n";

  for (const Axiom& a : o.axioms()) std::visit(writer, a.node);
  return writer.out.str();
}

}  // namespace cfgowl
