#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cfgowl/owl.hpp"

namespace cfgowl {

// Which consequences to draw during saturation. Full runs the whole rule
// set of the emitted fragment; SubclassOnly keeps just asserted types and
// named-subclass propagation (the hybrid path) and silently ignores other
// axiom kinds.
enum class RuleSet { Full, SubclassOnly };

// A derived or asserted fact. Class facts use a=class IRI, b=individual;
// property facts use a=property, b=subject, c=object.
struct Fact {
  enum class Kind { Class, Property };
  Kind kind;
  std::string a, b, c;

  bool operator==(const Fact&) const = default;
};

// Why a fact holds: a rule label plus the indices of its body facts.
// Asserted facts carry rule "asserted" and no body.
struct Justification {
  std::string rule;
  std::vector<std::size_t> body;
};

// Summary of one compiled chain axiom, kept for invariant checking.
struct ChainInfo {
  std::string first, middle, last, super;
  bool inverse_middle = false;
};

// The saturated least model: monotone, insertion-ordered, with one recorded
// justification per fact.
class FactBase {
 public:
  std::size_t size() const { return facts_.size(); }
  const Fact& fact(std::size_t i) const { return facts_[i]; }
  const Justification& justification(std::size_t i) const { return justifications_[i]; }

  bool has_class(const std::string& cls, const std::string& individual) const;
  bool has_property(const std::string& prop, const std::string& subject,
                    const std::string& object) const;

  // Named classes of an individual, in derivation order.
  std::vector<std::string> classes_of(const std::string& individual) const;

  // Compiled TBox summaries, for invariant checks against the model.
  const std::vector<ChainInfo>& chains() const { return chains_; }
  const std::vector<std::pair<std::string, std::string>>& rolifications() const {
    return rolifications_;
  }
  // property -> class, from EquivalentClasses(C, some(P, Thing))
  const std::vector<std::pair<std::string, std::string>>& existentials() const {
    return existentials_;
  }
  const std::unordered_set<std::string>& declared_classes() const { return declared_classes_; }

 private:
  friend class Saturator;

  std::vector<Fact> facts_;
  std::vector<Justification> justifications_;
  std::unordered_map<std::string, std::size_t> fact_index_;  // key -> index
  std::unordered_map<std::string, std::vector<std::size_t>> classes_by_individual_;
  std::vector<ChainInfo> chains_;
  std::vector<std::pair<std::string, std::string>> rolifications_;
  std::vector<std::pair<std::string, std::string>> existentials_;
  std::unordered_set<std::string> declared_classes_;
};

// Saturates the given ontologies to their least fixpoint. Axioms may appear
// in any of them; assertion-carrying ontologies usually follow the TBox.
// Throws UnsupportedAxiomError (Full mode) on axioms outside the fragment.
FactBase materialize(const Ontology& tbox, const std::vector<const Ontology*>& aboxes,
                     RuleSet rules = RuleSet::Full);

}  // namespace cfgowl
