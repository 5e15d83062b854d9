#include <map>
#include <set>

#include "cfgowl/grammar.hpp"

namespace cfgowl {

namespace {

// Fresh variable named `<base>_<k>` with k the smallest unused index.
std::string fresh_variable(const std::string& base, std::set<std::string>& taken) {
  for (std::size_t k = 0;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (taken.insert(candidate).second) return candidate;
  }
}

// Human-readable variable name for a terminal lifted out of a binary rhs.
// Single digits and a few operator characters get spelled-out names; other
// text is sanitized to identifier characters.
std::string terminal_variable_base(const std::string& text) {
  static const std::map<std::string, std::string> lexicon = {
      {"0", "Zero"}, {"1", "One"},   {"2", "Two"},   {"3", "Three"}, {"4", "Four"},
      {"5", "Five"}, {"6", "Six"},   {"7", "Seven"}, {"8", "Eight"}, {"9", "Nine"},
      {"+", "Plus"}, {"-", "Minus"}, {"*", "Star"},  {"/", "Slash"}, {"=", "Equals"},
      {"(", "LParen"}, {")", "RParen"}};
  auto it = lexicon.find(text);
  if (it != lexicon.end()) return it->second;
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      out.push_back(c);
    else
      out.push_back('_');
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "T_" + out;
  return out;
}

}  // namespace

Grammar to_cnf(const Grammar& g, CnfMode mode) {
  g.check();

  // Prune unproductive variables first, then anything unreachable from start.
  auto productive = detail::productive_variables(g);
  Grammar pruned;
  pruned.start = g.start;
  std::vector<Diagnostic> prune_warnings;
  std::set<std::string> dropped_vars;
  for (const Production& p : g.productions) {
    bool keep = productive.count(p.lhs) != 0;
    for (const Symbol& s : p.rhs) {
      if (s.is_variable() && !productive.count(s.text)) keep = false;
    }
    if (keep) {
      pruned.add_production(p);
    } else {
      dropped_vars.insert(p.lhs);
    }
  }
  for (const std::string& v : dropped_vars) {
    if (!pruned.is_variable(v))
      prune_warnings.push_back({Severity::Warning, "pruned unproductive variable '" + v + "'", 0, 0});
  }
  if (!pruned.is_variable(pruned.start))
    throw InputError("start symbol '" + pruned.start + "' derives no terminal string");

  auto reachable = detail::reachable_symbols(pruned);
  Grammar trimmed;
  trimmed.start = pruned.start;
  for (const Production& p : pruned.productions) {
    if (reachable.count(Symbol::variable(p.lhs))) trimmed.add_production(p);
  }
  for (const std::string& v : pruned.variables) {
    if (!reachable.count(Symbol::variable(v)))
      prune_warnings.push_back({Severity::Warning, "pruned unreachable variable '" + v + "'", 0, 0});
  }

  // Inline unit rules (A -> B) by copying every non-unit production of the
  // unit-closure of A. Preserves production order: copies are inserted where
  // the unit rule stood, in the closure's file order.
  Grammar no_units;
  no_units.start = trimmed.start;
  for (std::size_t i = 0; i < trimmed.productions.size(); ++i) {
    const Production& p = trimmed.productions[i];
    bool is_unit = p.rhs.size() == 1 && p.rhs[0].is_variable();
    if (!is_unit) {
      no_units.add_production(p);
      continue;
    }
    // Closure over unit chains from p.lhs via this rule's target.
    std::set<std::string> seen{p.lhs, p.rhs[0].text};
    std::vector<std::string> frontier{p.rhs[0].text};
    while (!frontier.empty()) {
      std::string v = frontier.front();
      frontier.erase(frontier.begin());
      for (const Production& q : trimmed.productions) {
        if (q.lhs != v) continue;
        if (q.rhs.size() == 1 && q.rhs[0].is_variable()) {
          if (seen.insert(q.rhs[0].text).second) frontier.push_back(q.rhs[0].text);
        } else {
          no_units.add_production({p.lhs, q.rhs});
        }
      }
    }
  }

  // Units may have left variables unreachable (e.g. a variable only used as
  // a unit target). Trim again so the result carries no dead symbols.
  auto reachable2 = detail::reachable_symbols(no_units);
  Grammar clean;
  clean.start = no_units.start;
  for (const Production& p : no_units.productions) {
    if (reachable2.count(Symbol::variable(p.lhs))) clean.add_production(p);
  }
  for (const std::string& v : no_units.variables) {
    if (!reachable2.count(Symbol::variable(v)))
      prune_warnings.push_back(
          {Severity::Warning, "pruned variable '" + v + "' left unreachable by unit inlining", 0, 0});
  }

  std::set<std::string> taken(clean.variables.begin(), clean.variables.end());

  // Split right-hand sides longer than two, grouping from the left:
  // A -> X1 X2 X3 becomes A_0 -> X1 X2 ; A -> A_0 X3.
  Grammar binary;
  binary.start = clean.start;
  for (const Production& p : clean.productions) {
    if (p.rhs.size() <= 2) {
      binary.add_production(p);
      continue;
    }
    Symbol head = p.rhs[0];
    for (std::size_t i = 1; i + 1 < p.rhs.size(); ++i) {
      std::string fresh = fresh_variable(p.lhs, taken);
      binary.add_production({fresh, {head, p.rhs[i]}});
      head = Symbol::variable(fresh);
    }
    binary.add_production({p.lhs, {head, p.rhs.back()}});
  }

  Grammar result;
  result.start = binary.start;
  if (mode == CnfMode::Relaxed) {
    result = std::move(binary);
  } else {
    // Lift terminals out of binary rhs: each distinct terminal gets one
    // variable T with production T -> t.
    std::map<std::string, std::string> lift;
    auto lifted = [&](const Symbol& s) -> Symbol {
      if (s.is_variable()) return s;
      auto it = lift.find(s.text);
      if (it != lift.end()) return Symbol::variable(it->second);
      std::string base = terminal_variable_base(s.text);
      std::string name = taken.insert(base).second ? base : fresh_variable(base, taken);
      lift.emplace(s.text, name);
      return Symbol::variable(name);
    };
    for (const Production& p : binary.productions) {
      if (p.rhs.size() == 2) {
        result.add_production({p.lhs, {lifted(p.rhs[0]), lifted(p.rhs[1])}});
      } else {
        result.add_production(p);
      }
    }
    for (const auto& [text, var] : lift) {
      // Skip if an identical rule already exists (the grammar may define it).
      result.add_production({var, {Symbol::terminal(text)}});
    }
  }

  // Keep brick names that survived; the rest are dropped with a warning.
  for (const std::string& b : g.bricks) {
    if (result.is_variable(b))
      result.bricks.push_back(b);
    else
      prune_warnings.push_back({Severity::Warning, "brick '" + b + "' pruned by normalization", 0, 0});
  }
  result.diagnostics = std::move(prune_warnings);
  result.check();
  return result;
}

}  // namespace cfgowl
