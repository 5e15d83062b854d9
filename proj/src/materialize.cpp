#include <algorithm>
#include <deque>

#include "cfgowl/materialize.hpp"

namespace cfgowl {

namespace {

std::string class_fact_key(const std::string& cls, const std::string& ind) {
  return "C|" + cls + "|" + ind;
}
std::string prop_fact_key(const std::string& p, const std::string& s, const std::string& o) {
  return "P|" + p + "|" + s + "|" + o;
}

}  // namespace

bool FactBase::has_class(const std::string& cls, const std::string& individual) const {
  return fact_index_.count(class_fact_key(cls, individual)) != 0;
}

bool FactBase::has_property(const std::string& prop, const std::string& subject,
                            const std::string& object) const {
  return fact_index_.count(prop_fact_key(prop, subject, object)) != 0;
}

std::vector<std::string> FactBase::classes_of(const std::string& individual) const {
  std::vector<std::string> out;
  auto it = classes_by_individual_.find(individual);
  if (it == classes_by_individual_.end()) return out;
  for (std::size_t idx : it->second) out.push_back(facts_[idx].a);
  return out;
}

// Forward-chaining worklist engine over the emitted fragment.
class Saturator {
 public:
  Saturator(RuleSet mode) : mode_(mode) {}

  void compile(const Ontology& o) {
    for (const Axiom& a : o.axioms()) std::visit(*this, a.node);
  }

  // -- axiom compilation ----------------------------------------------------

  void operator()(const Axiom::Declaration& d) {
    if (d.kind == EntityKind::Class) fb_.declared_classes_.insert(d.entity.value);
  }

  void operator()(const Axiom::SubClassOf& s) {
    const auto* sup = s.sup.as_named();
    if (mode_ == RuleSet::SubclassOnly && (sup == nullptr || s.sub.as_named() == nullptr))
      return;  // hybrid: named-to-named inclusions only
    if (sup == nullptr) return unsupported(Axiom{Axiom::SubClassOf{s}});
    if (const auto* sub = s.sub.as_named()) {
      auto& sups = subclass_[sub->iri.value];
      if (std::find(sups.begin(), sups.end(), sup->iri.value) == sups.end())
        sups.push_back(sup->iri.value);
      return;
    }
    // (A and V1) or (B and V2) SubClassOf head  -- any union of
    // intersections of named classes (single named disjuncts allowed)
    Gci gci;
    gci.head = sup->iri.value;
    std::vector<ClassExpr> disjuncts;
    if (const auto* u = std::get_if<ClassExpr::UnionOf>(&s.sub.node)) {
      disjuncts = u->operands;
    } else {
      disjuncts = {s.sub};
    }
    for (const ClassExpr& d : disjuncts) {
      std::vector<std::string> conjuncts;
      if (const auto* n = std::get_if<ClassExpr::Named>(&d.node)) {
        conjuncts.push_back(n->iri.value);
      } else if (const auto* i = std::get_if<ClassExpr::IntersectionOf>(&d.node)) {
        for (const ClassExpr& op : i->operands) {
          const auto* n2 = op.as_named();
          if (n2 == nullptr) return unsupported(Axiom{Axiom::SubClassOf{s}});
          conjuncts.push_back(n2->iri.value);
        }
      } else {
        return unsupported(Axiom{Axiom::SubClassOf{s}});
      }
      Gci one = gci;
      one.conjuncts = std::move(conjuncts);
      std::size_t rule_id = gcis_.size();
      gcis_.push_back(std::move(one));
      for (const std::string& c : gcis_.back().conjuncts) gci_by_class_[c].push_back(rule_id);
    }
  }

  void operator()(const Axiom::EquivalentClasses& e) {
    if (mode_ == RuleSet::SubclassOnly) return;
    const auto* cls = e.lhs.as_named();
    if (cls == nullptr) return unsupported(Axiom{Axiom::EquivalentClasses{e}});
    if (const auto* self = std::get_if<ClassExpr::HasSelf>(&e.rhs.node)) {
      auto [it2, fresh] = rolification_by_class_.emplace(cls->iri.value, self->property.value);
      (void)it2;
      if (fresh) {
        rolification_by_property_[self->property.value] = cls->iri.value;
        fb_.rolifications_.emplace_back(cls->iri.value, self->property.value);
      }
      return;
    }
    if (const auto* some = std::get_if<ClassExpr::SomeValuesFrom>(&e.rhs.node)) {
      if (some->filler->is_thing()) {
        auto& classes = existential_by_property_[some->property.value];
        if (std::find(classes.begin(), classes.end(), cls->iri.value) == classes.end()) {
          classes.push_back(cls->iri.value);
          fb_.existentials_.emplace_back(some->property.value, cls->iri.value);
        }
        return;
      }
    }
    unsupported(Axiom{Axiom::EquivalentClasses{e}});
  }

  void operator()(const Axiom::SubPropertyChainOf& c) {
    if (mode_ == RuleSet::SubclassOnly) return;
    if (c.chain.size() != 3 || c.chain[0].inverse || c.chain[2].inverse)
      return unsupported(Axiom{Axiom::SubPropertyChainOf{c}});
    Chain chain;
    chain.first = c.chain[0].property.value;
    chain.middle = c.chain[1].property.value;
    chain.last = c.chain[2].property.value;
    chain.super = c.super.value;
    chain.inverse_middle = c.chain[1].inverse;
    if (!chain_keys_.insert(axiom_key(Axiom{Axiom::SubPropertyChainOf{c}})).second) return;
    std::size_t id = chains_.size();
    chains_.push_back(chain);
    chain_by_first_[chain.first].push_back(id);
    chain_by_last_[chain.last].push_back(id);
    chain_by_middle_[chain.middle].push_back(id);
    fb_.chains_.push_back(
        {chain.first, chain.middle, chain.last, chain.super, chain.inverse_middle});
  }

  void operator()(const Axiom::ClassAssertion& a) {
    const auto* n = a.type.as_named();
    if (n == nullptr) return unsupported(Axiom{Axiom::ClassAssertion{a}});
    asserted_.push_back(Fact{Fact::Kind::Class, n->iri.value, a.individual.value, ""});
  }

  void operator()(const Axiom::ObjectPropertyAssertion& a) {
    asserted_.push_back(Fact{Fact::Kind::Property, a.property.value, a.subject.value,
                             a.object.value});
  }

  // -- saturation -----------------------------------------------------------

  FactBase run() {
    for (const Fact& f : asserted_) add_fact(f, {"asserted", {}});
    while (!worklist_.empty()) {
      std::size_t idx = worklist_.front();
      worklist_.pop_front();
      derive_from(idx);
    }
    return std::move(fb_);
  }

 private:
  struct Gci {
    std::vector<std::string> conjuncts;
    std::string head;
  };
  struct Chain {
    std::string first, middle, last, super;
    bool inverse_middle = false;
  };

  void unsupported(const Axiom& a) { throw UnsupportedAxiomError(axiom_key(a)); }

  bool add_fact(const Fact& f, Justification j) {
    std::string key = f.kind == Fact::Kind::Class ? class_fact_key(f.a, f.b)
                                                  : prop_fact_key(f.a, f.b, f.c);
    auto [it, fresh] = fb_.fact_index_.emplace(std::move(key), fb_.facts_.size());
    if (!fresh) return false;
    std::size_t idx = fb_.facts_.size();
    fb_.facts_.push_back(f);
    fb_.justifications_.push_back(std::move(j));
    if (f.kind == Fact::Kind::Class) {
      fb_.classes_by_individual_[f.b].push_back(idx);
    } else {
      if (f.b == f.c) reflexive_[f.a].push_back(f.b);
      links_by_subject_[f.a + "|" + f.b].push_back(f.c);
      links_by_object_[f.a + "|" + f.c].push_back(f.b);
    }
    worklist_.push_back(idx);
    return true;
  }

  std::size_t index_of_class(const std::string& cls, const std::string& ind) const {
    return fb_.fact_index_.at(class_fact_key(cls, ind));
  }
  std::size_t index_of_prop(const std::string& p, const std::string& s,
                            const std::string& o) const {
    return fb_.fact_index_.at(prop_fact_key(p, s, o));
  }

  bool holds_class(const std::string& cls, const std::string& ind) const {
    return fb_.fact_index_.count(class_fact_key(cls, ind)) != 0;
  }
  bool holds_reflexive(const std::string& prop, const std::string& ind) const {
    return fb_.fact_index_.count(prop_fact_key(prop, ind, ind)) != 0;
  }

  void derive_from(std::size_t idx) {
    const Fact f = fb_.facts_[idx];
    if (f.kind == Fact::Kind::Class) {
      derive_from_class(idx, f.a, f.b);
    } else {
      derive_from_property(idx, f.a, f.b, f.c);
    }
  }

  void derive_from_class(std::size_t idx, const std::string& cls, const std::string& ind) {
    // C(x) => D(x)
    if (auto it = subclass_.find(cls); it != subclass_.end()) {
      for (const std::string& sup : it->second) {
        add_fact({Fact::Kind::Class, sup, ind, ""},
                 {"subclass(" + cls + " -> " + sup + ")", {idx}});
      }
    }
    // C(x) => R_C(x,x)
    if (auto it = rolification_by_class_.find(cls); it != rolification_by_class_.end()) {
      add_fact({Fact::Kind::Property, it->second, ind, ind},
               {"rolification(" + cls + ")", {idx}});
    }
    // (C1 and ... Cn) => head, the new fact completing the conjunction
    if (auto it = gci_by_class_.find(cls); it != gci_by_class_.end()) {
      for (std::size_t rule_id : it->second) {
        const Gci& rule = gcis_[rule_id];
        bool all = true;
        std::vector<std::size_t> body;
        for (const std::string& c : rule.conjuncts) {
          if (!holds_class(c, ind)) {
            all = false;
            break;
          }
          body.push_back(index_of_class(c, ind));
        }
        if (all) {
          add_fact({Fact::Kind::Class, rule.head, ind, ""},
                   {"inclusion(-> " + rule.head + ")", std::move(body)});
        }
      }
    }
  }

  void derive_from_property(std::size_t idx, const std::string& prop, const std::string& subj,
                            const std::string& obj) {
    // R(x,y) => V(x) for V == some(R, Thing)
    if (auto it = existential_by_property_.find(prop); it != existential_by_property_.end()) {
      for (const std::string& cls : it->second) {
        add_fact({Fact::Kind::Class, cls, subj, ""}, {"existential(" + prop + ")", {idx}});
      }
    }
    if (subj == obj) {
      // R_C(x,x) => C(x)
      if (auto it = rolification_by_property_.find(prop);
          it != rolification_by_property_.end()) {
        add_fact({Fact::Kind::Class, it->second, subj, ""},
                 {"rolification_inverse(" + prop + ")", {idx}});
      }
      // this reflexive fact as the first or last leg of a chain
      if (auto it = chain_by_first_.find(prop); it != chain_by_first_.end()) {
        for (std::size_t id : it->second) try_chain_around(id, subj);
      }
      if (auto it = chain_by_last_.find(prop); it != chain_by_last_.end()) {
        for (std::size_t id : it->second) try_chain_around(id, subj);
      }
    }
    // this fact as the middle leg
    if (auto it = chain_by_middle_.find(prop); it != chain_by_middle_.end()) {
      for (std::size_t id : it->second) try_chain_link(id, subj, obj);
    }
  }

  // Re-examine every middle link touching `ind` for chain `id`.
  void try_chain_around(std::size_t id, const std::string& ind) {
    const Chain& chain = chains_[id];
    if (auto it = links_by_subject_.find(chain.middle + "|" + ind);
        it != links_by_subject_.end()) {
      for (const std::string& obj : it->second) try_chain_link(id, ind, obj);
    }
    if (auto it = links_by_object_.find(chain.middle + "|" + ind);
        it != links_by_object_.end()) {
      for (const std::string& subj : it->second) try_chain_link(id, subj, ind);
    }
  }

  // Middle link N(x,y): forward chains need first(x,x) and last(y,y) and
  // produce super(x,y); inverse-middle chains need first(y,y) and last(x,x)
  // and produce super(y,x).
  void try_chain_link(std::size_t id, const std::string& x, const std::string& y) {
    const Chain& chain = chains_[id];
    if (!chain.inverse_middle) {
      if (holds_reflexive(chain.first, x) && holds_reflexive(chain.last, y)) {
        add_fact({Fact::Kind::Property, chain.super, x, y},
                 {"chain(" + chain.first + " o " + chain.middle + " o " + chain.last + ")",
                  {index_of_prop(chain.first, x, x), index_of_prop(chain.middle, x, y),
                   index_of_prop(chain.last, y, y)}});
      }
    } else {
      if (holds_reflexive(chain.first, y) && holds_reflexive(chain.last, x)) {
        add_fact({Fact::Kind::Property, chain.super, y, x},
                 {"chain(" + chain.first + " o inverse(" + chain.middle + ") o " + chain.last +
                      ")",
                  {index_of_prop(chain.first, y, y), index_of_prop(chain.middle, x, y),
                   index_of_prop(chain.last, x, x)}});
      }
    }
  }

  RuleSet mode_;
  FactBase fb_;

  std::unordered_map<std::string, std::vector<std::string>> subclass_;
  std::vector<Gci> gcis_;
  std::unordered_map<std::string, std::vector<std::size_t>> gci_by_class_;
  std::unordered_map<std::string, std::string> rolification_by_class_;
  std::unordered_map<std::string, std::string> rolification_by_property_;
  std::unordered_map<std::string, std::vector<std::string>> existential_by_property_;
  std::vector<Chain> chains_;
  std::unordered_set<std::string> chain_keys_;
  std::unordered_map<std::string, std::vector<std::size_t>> chain_by_first_;
  std::unordered_map<std::string, std::vector<std::size_t>> chain_by_last_;
  std::unordered_map<std::string, std::vector<std::size_t>> chain_by_middle_;

  std::unordered_map<std::string, std::vector<std::string>> reflexive_;
  std::unordered_map<std::string, std::vector<std::string>> links_by_subject_;
  std::unordered_map<std::string, std::vector<std::string>> links_by_object_;

  std::vector<Fact> asserted_;
  std::deque<std::size_t> worklist_;
};

FactBase materialize(const Ontology& tbox, const std::vector<const Ontology*>& aboxes,
                     RuleSet rules) {
  Saturator saturator(rules);
  saturator.compile(tbox);
  for (const Ontology* o : aboxes) {
    if (o != nullptr) saturator.compile(*o);
  }
  return saturator.run();
}

}  // namespace cfgowl
