#include "cfgowl/owl.hpp"

#include <sstream>

namespace cfgowl {

namespace {

bool is_unreserved(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '~' || c == '-';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string percent_encode(const std::string& text) {
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) {
    if (is_unreserved(c)) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xF]);
    }
  }
  return out;
}

std::string percent_decode(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size()) {
      int hi = hex_value(text[i + 1]);
      int lo = hex_value(text[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        continue;
      }
    }
    out.push_back(text[i]);
  }
  return out;
}

std::string Iri::local_name() const {
  auto hash = value.rfind('#');
  if (hash != std::string::npos) return value.substr(hash + 1);
  auto slash = value.rfind('/');
  if (slash != std::string::npos) return value.substr(slash + 1);
  return value;
}

namespace {

struct ExprKeyVisitor {
  std::ostringstream& os;

  void operator()(const ClassExpr::Named& n) { os << "N<" << n.iri.value << ">"; }
  void operator()(const ClassExpr::Thing&) { os << "Thing"; }
  void operator()(const ClassExpr::HasSelf& h) { os << "Self<" << h.property.value << ">"; }
  void operator()(const ClassExpr::SomeValuesFrom& s) {
    os << "Some<" << s.property.value << "," << expr_key(*s.filler) << ">";
  }
  void operator()(const ClassExpr::IntersectionOf& i) {
    os << "And(";
    for (const ClassExpr& e : i.operands) os << expr_key(e) << ";";
    os << ")";
  }
  void operator()(const ClassExpr::UnionOf& u) {
    os << "Or(";
    for (const ClassExpr& e : u.operands) os << expr_key(e) << ";";
    os << ")";
  }
};

const char* entity_kind_name(EntityKind k) {
  switch (k) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::NamedIndividual: return "NamedIndividual";
  }
  return "?";
}

struct AxiomKeyVisitor {
  std::ostringstream& os;

  void operator()(const Axiom::Declaration& d) {
    os << "Decl(" << entity_kind_name(d.kind) << "," << d.entity.value << ")";
  }
  void operator()(const Axiom::SubClassOf& s) {
    os << "SubClassOf(" << expr_key(s.sub) << "," << expr_key(s.sup) << ")";
  }
  void operator()(const Axiom::EquivalentClasses& e) {
    os << "EquivalentClasses(" << expr_key(e.lhs) << "," << expr_key(e.rhs) << ")";
  }
  void operator()(const Axiom::SubPropertyChainOf& c) {
    os << "SubPropertyChainOf(";
    for (const PropertyTerm& t : c.chain) {
      if (t.inverse) os << "inv:";
      os << t.property.value << ";";
    }
    os << "-> " << c.super.value << ")";
  }
  void operator()(const Axiom::ClassAssertion& a) {
    os << "ClassAssertion(" << expr_key(a.type) << "," << a.individual.value << ")";
  }
  void operator()(const Axiom::ObjectPropertyAssertion& a) {
    os << "PropertyAssertion(" << a.property.value << "," << a.subject.value << ","
       << a.object.value << ")";
  }
};

}  // namespace

std::string expr_key(const ClassExpr& e) {
  std::ostringstream os;
  std::visit(ExprKeyVisitor{os}, e.node);
  return os.str();
}

std::string axiom_key(const Axiom& a) {
  std::ostringstream os;
  std::visit(AxiomKeyVisitor{os}, a.node);
  return os.str();
}

void Ontology::add_prefix(const std::string& prefix, const std::string& ns) {
  for (const auto& [p, n] : prefixes_) {
    if (p == prefix) return;
  }
  prefixes_.emplace_back(prefix, ns);
}

bool Ontology::add(Axiom a) {
  if (!keys_.insert(axiom_key(a)).second) return false;
  axioms_.push_back(std::move(a));
  return true;
}

void Ontology::merge(const Ontology& other) {
  for (const auto& [p, n] : other.prefixes()) add_prefix(p, n);
  for (const Axiom& a : other.axioms()) add(a);
}

std::size_t count_axioms(const Ontology& o) { return o.size(); }

}  // namespace cfgowl
