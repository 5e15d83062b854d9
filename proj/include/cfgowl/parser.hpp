#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cfgowl/grammar.hpp"

namespace cfgowl {

// A derivation tree. Inner nodes carry variables; leaves carry terminals
// (or, for uncovered segment singletons, a bare terminal with no parent).
// `begin`/`end` is the half-open token span the node covers.
struct ParseTree {
  Symbol label;
  std::vector<ParseTree> children;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool is_leaf() const { return children.empty(); }

  // Terminal leaf tokens, left to right.
  std::vector<std::string> leaf_tokens() const;

  // Compact text form, e.g. Expression(Expression_0(Expression(1), Plus(+)), Expression(0)).
  std::string to_string() const;

  bool operator==(const ParseTree&) const = default;
};

struct RecognizeResult {
  bool accepted = false;
  // Largest number of leading tokens the chart consumed.
  std::size_t recognized_prefix = 0;
  std::vector<Diagnostic> diagnostics;
};

// Earley chart recognition over any valid (epsilon-free) grammar.
// Tokens outside the grammar's alphabet yield false plus a diagnostic.
RecognizeResult recognize_ex(const Grammar& g, const std::vector<std::string>& tokens);
bool recognize(const Grammar& g, const std::vector<std::string>& tokens);

// Deterministic derivation tree for a relaxed-CNF grammar: at every node the
// production with the smallest index wins, then the smallest split point.
// `root` defaults to the start symbol. Throws NotInLanguageError (carrying
// the recognized prefix length) when the sequence is not derivable.
ParseTree parse(const Grammar& g, const std::vector<std::string>& tokens);
ParseTree parse(const Grammar& g, const std::vector<std::string>& tokens, const std::string& root);

// Span chart for a relaxed-CNF grammar, restricted to the productions
// reachable from `roots`. Backs both parse() and the greedy segmenter.
class SpanTable {
 public:
  SpanTable(const Grammar& g, const std::vector<std::string>& tokens,
            const std::vector<std::string>& roots);

  // True iff `var` derives tokens[i, j).
  bool derivable(const std::string& var, std::size_t i, std::size_t j) const;

  // Deterministic tree for a derivable span (see parse() for the tie-break).
  ParseTree tree(const std::string& var, std::size_t i, std::size_t j) const;

 private:
  std::shared_ptr<const class SpanTableImpl> impl_;
};

// CYK recognition; requires strict CNF. Test oracle for the Earley path.
bool cyk_recognize(const Grammar& g, const std::vector<std::string>& tokens);

}  // namespace cfgowl
