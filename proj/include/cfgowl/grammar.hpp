#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cfgowl/diag.hpp"

namespace cfgowl {

// A grammar symbol: either a terminal (verbatim surface text, e.g. "C:min7")
// or a variable (identifier). Terminals and variables live in disjoint sets.
struct Symbol {
  enum class Kind { Terminal, Variable };

  Kind kind = Kind::Terminal;
  std::string text;

  bool is_terminal() const { return kind == Kind::Terminal; }
  bool is_variable() const { return kind == Kind::Variable; }

  static Symbol terminal(std::string text) { return {Kind::Terminal, std::move(text)}; }
  static Symbol variable(std::string text) { return {Kind::Variable, std::move(text)}; }

  bool operator==(const Symbol&) const = default;
  auto operator<=>(const Symbol&) const = default;
};

struct Production {
  std::string lhs;          // always a variable
  std::vector<Symbol> rhs;  // length >= 1; never empty (no epsilon rules)

  bool operator==(const Production&) const = default;
  auto operator<=>(const Production&) const = default;

  bool is_terminal_rule() const { return rhs.size() == 1 && rhs[0].is_terminal(); }
  bool is_binary() const { return rhs.size() == 2; }
};

// A context-free grammar. Variables are ordered by first appearance as a
// left-hand side, terminals by first appearance in a right-hand side;
// productions keep file order. Duplicate productions are dropped on
// construction and reported through `diagnostics`.
struct Grammar {
  std::vector<std::string> variables;
  std::vector<std::string> terminals;
  std::vector<Production> productions;
  std::string start;
  std::vector<std::string> bricks;  // from the optional `bricks:` directive

  // Warnings gathered while loading or transforming (duplicates, pruning).
  std::vector<Diagnostic> diagnostics;

  bool is_variable(const std::string& name) const;
  bool is_terminal(const std::string& text) const;

  // Index of a variable in `variables`, or npos.
  std::size_t variable_index(const std::string& name) const;

  // Appends a production unless an identical one is already present.
  // Returns false on duplicate. Registers unseen symbols.
  bool add_production(Production p);

  // Relaxed form: every rhs is two symbols from V's union with Sigma, or a
  // single terminal. Strict form additionally requires both symbols of a
  // binary rhs to be variables.
  bool is_relaxed_cnf() const;
  bool is_strict_cnf() const;

  // Throws InputError when a structural invariant is broken (start missing,
  // undeclared symbol in a production, terminal used as lhs).
  void check() const;

 private:
  std::unordered_map<std::string, std::size_t> variable_index_;
  std::unordered_set<std::string> terminal_set_;
  std::set<Production> production_set_;
};

// Parses the grammar file format:
//   LHS -> alt1 | alt2 | ...
// one rule per line, `|` continuation lines, double-quoted terminals with
// backslash escapes, `#` comments, optional `start:` / `bricks:` directives.
// Throws InputError on syntax errors, undeclared rhs identifiers, or an
// empty grammar. Duplicate productions are dropped with a warning.
Grammar parse_grammar(const std::string& text);

// Writes a grammar back in the file format (alternatives grouped per lhs,
// terminals always quoted). parse_grammar(serialize_grammar(g)) == g.
std::string serialize_grammar(const Grammar& g);

// Structural diagnostics: load warnings, unreachable symbols, an
// unproductive start symbol, a start symbol that is not a variable.
// Errors are returned, never thrown.
std::vector<Diagnostic> validate(const Grammar& g);

enum class CnfMode { Relaxed, Strict };

// Converts to (relaxed or strict) Chomsky normal form. Unreachable and
// unproductive symbols are pruned with a warning; unit rules are inlined;
// long right-hand sides are split left to right with fresh variables named
// `<lhs>_<k>`. Strict mode also lifts terminals out of binary rhs.
// Idempotent: normalizing a normal-form grammar returns it unchanged.
Grammar to_cnf(const Grammar& g, CnfMode mode);

// Exhaustive language enumeration up to `max_len` tokens (inclusive).
// Test oracle only; max_len must be <= 12.
std::set<std::vector<std::string>> enumerate_language(const Grammar& g, std::size_t max_len);

namespace detail {
std::unordered_set<std::string> productive_variables(const Grammar& g);
std::set<Symbol> reachable_symbols(const Grammar& g);
}  // namespace detail

}  // namespace cfgowl
