#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "cfgowl/diag.hpp"

namespace cfgowl {

// Percent-encoding for IRI local names: every byte outside [A-Za-z0-9_.~-]
// becomes %HH (uppercase hex). So "C:min7" -> "C%3Amin7".
std::string percent_encode(const std::string& text);
std::string percent_decode(const std::string& text);

struct Iri {
  std::string value;

  Iri() = default;
  explicit Iri(std::string v) : value(std::move(v)) {}

  // Fragment part after '#', or the tail after the last '/'.
  std::string local_name() const;

  bool operator==(const Iri&) const = default;
  auto operator<=>(const Iri&) const = default;
};

// A property either used directly or under inverse (chains only).
struct PropertyTerm {
  Iri property;
  bool inverse = false;

  bool operator==(const PropertyTerm&) const = default;
};

struct ClassExpr {
  struct Named {
    Iri iri;
  };
  struct Thing {};
  struct HasSelf {
    Iri property;
  };
  struct SomeValuesFrom {
    Iri property;
    std::shared_ptr<const ClassExpr> filler;
  };
  struct IntersectionOf {
    std::vector<ClassExpr> operands;  // >= 2
  };
  struct UnionOf {
    std::vector<ClassExpr> operands;  // >= 2
  };

  std::variant<Named, Thing, HasSelf, SomeValuesFrom, IntersectionOf, UnionOf> node;

  static ClassExpr named(Iri iri) { return {Named{std::move(iri)}}; }
  static ClassExpr thing() { return {Thing{}}; }
  static ClassExpr has_self(Iri property) { return {HasSelf{std::move(property)}}; }
  static ClassExpr some_values_from(Iri property, ClassExpr filler) {
    return {SomeValuesFrom{std::move(property), std::make_shared<const ClassExpr>(std::move(filler))}};
  }
  static ClassExpr intersection_of(std::vector<ClassExpr> operands) {
    return {IntersectionOf{std::move(operands)}};
  }
  static ClassExpr union_of(std::vector<ClassExpr> operands) {
    return {UnionOf{std::move(operands)}};
  }

  const Named* as_named() const { return std::get_if<Named>(&node); }
  bool is_thing() const { return std::holds_alternative<Thing>(node); }
};

enum class EntityKind { Class, ObjectProperty, NamedIndividual };

struct Axiom {
  struct Declaration {
    EntityKind kind;
    Iri entity;
  };
  struct SubClassOf {
    ClassExpr sub;
    ClassExpr sup;
  };
  struct EquivalentClasses {
    ClassExpr lhs;
    ClassExpr rhs;
  };
  struct SubPropertyChainOf {
    std::vector<PropertyTerm> chain;  // length >= 2
    Iri super;
  };
  struct ClassAssertion {
    ClassExpr type;
    Iri individual;
  };
  struct ObjectPropertyAssertion {
    Iri property;
    Iri subject;
    Iri object;
  };

  std::variant<Declaration, SubClassOf, EquivalentClasses, SubPropertyChainOf, ClassAssertion,
               ObjectPropertyAssertion>
      node;
};

// Canonical key strings; two axioms are the same axiom iff keys are equal.
std::string expr_key(const ClassExpr& e);
std::string axiom_key(const Axiom& a);

// An ordered, duplicate-free collection of axioms.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(Iri base) : base_(std::move(base)) {}

  const Iri& base() const { return base_; }
  void set_base(Iri base) { base_ = std::move(base); }

  // prefix -> namespace IRI, in registration order
  const std::vector<std::pair<std::string, std::string>>& prefixes() const { return prefixes_; }
  void add_prefix(const std::string& prefix, const std::string& ns);

  const std::vector<Axiom>& axioms() const { return axioms_; }

  // Appends unless an equal axiom is already present; returns false on dup.
  bool add(Axiom a);

  // Appends every axiom (and prefix) of `other`, suppressing duplicates.
  void merge(const Ontology& other);

  bool contains(const Axiom& a) const { return keys_.count(axiom_key(a)) != 0; }
  std::size_t size() const { return axioms_.size(); }

 private:
  Iri base_;
  std::vector<std::pair<std::string, std::string>> prefixes_;
  std::vector<Axiom> axioms_;
  std::unordered_set<std::string> keys_;
};

// Logical axioms plus entity declarations, duplicates suppressed: the number
// of statements the ontology holds.
std::size_t count_axioms(const Ontology& o);

}  // namespace cfgowl
