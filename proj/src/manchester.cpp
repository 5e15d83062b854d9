#include <sstream>

#include "cfgowl/owl_io.hpp"

namespace cfgowl {

namespace {

// Renders an IRI as a default-prefix name when it lives under the ontology
// base, as prefix:local for a registered prefix, else as <full-iri>.
class NameTable {
 public:
  explicit NameTable(const Ontology& o) {
    if (!o.base().value.empty()) base_ = o.base().value + "#";
    for (const auto& [prefix, ns] : o.prefixes()) prefixes_.emplace_back(prefix, ns);
  }

  std::string operator()(const Iri& iri) const {
    if (!base_.empty() && iri.value.starts_with(base_)) return iri.value.substr(base_.size());
    for (const auto& [prefix, ns] : prefixes_) {
      if (iri.value.starts_with(ns)) return prefix + ":" + iri.value.substr(ns.size());
    }
    return "<" + iri.value + ">";
  }

 private:
  std::string base_;
  std::vector<std::pair<std::string, std::string>> prefixes_;
};

struct ManchesterWriter {
  const NameTable& name;
  std::ostringstream out;
  std::string last_header;

  // Consecutive axioms about the same entity share one frame header.
  void frame(const std::string& header) {
    if (header != last_header) {
      out << header << "\n";
      last_header = header;
    }
  }

  std::string expr(const ClassExpr& e, bool parenthesize_composite = true) {
    std::ostringstream os;
    if (const auto* n = std::get_if<ClassExpr::Named>(&e.node)) {
      os << name(n->iri);
    } else if (std::holds_alternative<ClassExpr::Thing>(e.node)) {
      os << "owl:Thing";
    } else if (const auto* h = std::get_if<ClassExpr::HasSelf>(&e.node)) {
      os << name(h->property) << " some Self";
    } else if (const auto* s = std::get_if<ClassExpr::SomeValuesFrom>(&e.node)) {
      os << name(s->property) << " some " << expr(*s->filler);
    } else if (const auto* i = std::get_if<ClassExpr::IntersectionOf>(&e.node)) {
      std::string body;
      for (std::size_t k = 0; k < i->operands.size(); ++k) {
        if (k) body += " and ";
        body += expr(i->operands[k]);
      }
      os << (parenthesize_composite ? "(" + body + ")" : body);
    } else if (const auto* u = std::get_if<ClassExpr::UnionOf>(&e.node)) {
      std::string body;
      for (std::size_t k = 0; k < u->operands.size(); ++k) {
        if (k) body += " or ";
        body += expr(u->operands[k]);
      }
      os << (parenthesize_composite ? "(" + body + ")" : body);
    }
    return os.str();
  }

  void operator()(const Axiom::Declaration& d) {
    switch (d.kind) {
      case EntityKind::Class: frame("Class: " + name(d.entity)); break;
      case EntityKind::ObjectProperty: frame("ObjectProperty: " + name(d.entity)); break;
      case EntityKind::NamedIndividual: frame("Individual: " + name(d.entity)); break;
    }
  }

  void operator()(const Axiom::SubClassOf& s) {
    if (const auto* n = std::get_if<ClassExpr::Named>(&s.sub.node)) {
      frame("Class: " + name(n->iri));
      out << "    SubClassOf: " << expr(s.sup, false) << "\n";
    } else {
      // General class inclusion: no frame form, written standalone.
      out << expr(s.sub, false) << " SubClassOf: " << expr(s.sup, false) << "\n";
      last_header.clear();
    }
  }

  void operator()(const Axiom::EquivalentClasses& e) {
    if (const auto* n = std::get_if<ClassExpr::Named>(&e.lhs.node)) {
      frame("Class: " + name(n->iri));
      out << "    EquivalentTo: " << expr(e.rhs, false) << "\n";
    } else {
      out << expr(e.lhs, false) << " EquivalentTo: " << expr(e.rhs, false) << "\n";
      last_header.clear();
    }
  }

  void operator()(const Axiom::SubPropertyChainOf& c) {
    frame("ObjectProperty: " + name(c.super));
    out << "    SubPropertyChain: ";
    for (std::size_t i = 0; i < c.chain.size(); ++i) {
      if (i) out << " o ";
      if (c.chain[i].inverse)
        out << "inverse(" << name(c.chain[i].property) << ")";
      else
        out << name(c.chain[i].property);
    }
    out << "\n";
  }

  void operator()(const Axiom::ClassAssertion& a) {
    frame("Individual: " + name(a.individual));
    out << "    Types: " << expr(a.type, false) << "\n";
  }

  void operator()(const Axiom::ObjectPropertyAssertion& a) {
    frame("Individual: " + name(a.subject));
    out << "    Facts: " << name(a.property) << " " << name(a.object) << "\n";
  }
};

}  // namespace

std::string serialize_manchester(const Ontology& o) {
  NameTable name(o);
  ManchesterWriter writer{name, {}, {}};

  if (!o.base().value.empty())
    writer.out << "Prefix: : <" << o.base().value << "#>\n";
  writer.out << "Prefix: owl: <http://www.w3.org/2002/07/owl#>\n";
  for (const auto& [prefix, ns] : o.prefixes())
    writer.out << "Prefix: " << prefix << ": <" << ns << ">\n";
  writer.out << "\nOntology: <" << o.base().value << ">\n\n";

  for (const Axiom& a : o.axioms()) std::visit(writer, a.node);
  return writer.out.str();
}

}  // namespace cfgowl
