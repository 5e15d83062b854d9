#include <map>

#include "cfgowl/grammar.hpp"

namespace cfgowl {

// Bottom-up fixpoint over per-symbol string sets. Terminals seed their own
// singleton; each pass concatenates right-hand sides with length pruning.
// Terminates because every set is bounded by the strings of length <= max_len.
std::set<std::vector<std::string>> enumerate_language(const Grammar& g, std::size_t max_len) {
  if (max_len > 12) throw InputError("enumeration oracle capped at max_len 12");
  g.check();

  using Word = std::vector<std::string>;
  using WordSet = std::set<Word>;
  std::map<Symbol, WordSet> derivable;
  for (const std::string& t : g.terminals) derivable[Symbol::terminal(t)] = {{t}};
  for (const std::string& v : g.variables) derivable[Symbol::variable(v)] = {};

  if (max_len == 0) return {};

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Production& p : g.productions) {
      WordSet partial = {{}};
      for (const Symbol& s : p.rhs) {
        WordSet next;
        const WordSet& suffixes = derivable[s];
        for (const Word& prefix : partial) {
          for (const Word& suffix : suffixes) {
            if (prefix.size() + suffix.size() > max_len) continue;
            Word w = prefix;
            w.insert(w.end(), suffix.begin(), suffix.end());
            next.insert(std::move(w));
          }
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      WordSet& target = derivable[Symbol::variable(p.lhs)];
      for (const Word& w : partial) {
        if (target.insert(w).second) changed = true;
      }
    }
  }
  return derivable[Symbol::variable(g.start)];
}

}  // namespace cfgowl
