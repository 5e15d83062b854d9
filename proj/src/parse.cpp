#include <map>
#include <set>

#include "cfgowl/parser.hpp"

namespace cfgowl {

// Chart for a relaxed-CNF grammar restricted to the productions reachable
// from the requested roots. derivable(v, i, j) <=> v derives tokens[i, j).
class SpanTableImpl {
 public:
  SpanTableImpl(Grammar g, std::vector<std::string> tokens, const std::vector<std::string>& roots)
      : grammar_(std::move(g)), tokens_(std::move(tokens)) {
    const Grammar& gr = grammar_;
    if (!gr.is_relaxed_cnf()) throw InputError("grammar is not in relaxed CNF");

    // Reachability closure, original production indices preserved so the
    // smallest-index tie-break matches the grammar file.
    std::set<std::string> live;
    std::vector<std::string> work;
    for (const std::string& r : roots) {
      if (gr.variable_index(r) == static_cast<std::size_t>(-1))
        throw InputError("parse root '" + r + "' is not a variable");
      if (live.insert(r).second) work.push_back(r);
    }
    while (!work.empty()) {
      std::string v = work.back();
      work.pop_back();
      for (const Production& p : gr.productions) {
        if (p.lhs != v) continue;
        for (const Symbol& s : p.rhs) {
          if (s.is_variable() && live.insert(s.text).second) work.push_back(s.text);
        }
      }
    }
    for (std::size_t pi = 0; pi < gr.productions.size(); ++pi) {
      if (live.count(gr.productions[pi].lhs)) productions_.push_back(pi);
    }
    for (const std::string& v : live) var_ids_.emplace(v, var_ids_.size());

    const std::size_t n = tokens_.size();
    table_.assign(var_ids_.size() * n * (n + 1), false);
    for (std::size_t len = 1; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        std::size_t j = i + len;
        for (std::size_t pi : productions_) {
          const Production& p = grammar_.productions[pi];
          std::size_t vid = var_ids_.find(p.lhs)->second;
          if (at(vid, i, j)) continue;
          if (derives_here(p, i, j) != kNoSplit) set(vid, i, j);
        }
      }
    }
  }

  bool derivable(const std::string& var, std::size_t i, std::size_t j) const {
    auto it = var_ids_.find(var);
    return it != var_ids_.end() && j > i && j <= tokens_.size() && at(it->second, i, j);
  }

  ParseTree build(const std::string& var, std::size_t i, std::size_t j) const {
    for (std::size_t pi : productions_) {
      const Production& p = grammar_.productions[pi];
      if (p.lhs != var) continue;
      std::size_t split = derives_here(p, i, j);
      if (split == kNoSplit) continue;
      ParseTree node{Symbol::variable(var), {}, i, j};
      if (p.is_terminal_rule()) {
        node.children.push_back({p.rhs[0], {}, i, j});
      } else {
        node.children.push_back(subtree(p.rhs[0], i, split));
        node.children.push_back(subtree(p.rhs[1], split, j));
      }
      return node;
    }
    throw Error("internal: no production derives '" + var + "' over a derivable span");
  }

  std::size_t size() const { return tokens_.size(); }

 private:
  static constexpr std::size_t kNoSplit = static_cast<std::size_t>(-1);

  bool symbol_derives(const Symbol& s, std::size_t i, std::size_t j) const {
    if (s.is_terminal()) return j == i + 1 && tokens_[i] == s.text;
    auto it = var_ids_.find(s.text);
    return it != var_ids_.end() && at(it->second, i, j);
  }

  // Smallest split point for a binary production over [i, j), j for a
  // matching terminal rule, kNoSplit otherwise.
  std::size_t derives_here(const Production& p, std::size_t i, std::size_t j) const {
    if (p.is_terminal_rule())
      return (j == i + 1 && tokens_[i] == p.rhs[0].text) ? j : kNoSplit;
    for (std::size_t k = i + 1; k < j; ++k) {
      if (symbol_derives(p.rhs[0], i, k) && symbol_derives(p.rhs[1], k, j)) return k;
    }
    return kNoSplit;
  }

  ParseTree subtree(const Symbol& s, std::size_t i, std::size_t j) const {
    if (s.is_terminal()) return {s, {}, i, j};
    return build(s.text, i, j);
  }

  bool at(std::size_t vid, std::size_t i, std::size_t j) const {
    return table_[(vid * tokens_.size() + i) * (tokens_.size() + 1) + j];
  }
  void set(std::size_t vid, std::size_t i, std::size_t j) {
    table_[(vid * tokens_.size() + i) * (tokens_.size() + 1) + j] = true;
  }

  Grammar grammar_;
  std::vector<std::string> tokens_;
  std::vector<std::size_t> productions_;
  std::map<std::string, std::size_t> var_ids_;
  std::vector<bool> table_;
};

SpanTable::SpanTable(const Grammar& g, const std::vector<std::string>& tokens,
                     const std::vector<std::string>& roots) {
  g.check();
  impl_ = std::make_shared<const SpanTableImpl>(g, tokens, roots);
}

bool SpanTable::derivable(const std::string& var, std::size_t i, std::size_t j) const {
  return impl_->derivable(var, i, j);
}

ParseTree SpanTable::tree(const std::string& var, std::size_t i, std::size_t j) const {
  if (!impl_->derivable(var, i, j))
    throw Error("internal: tree requested for a non-derivable span");
  return impl_->build(var, i, j);
}

ParseTree parse(const Grammar& g, const std::vector<std::string>& tokens, const std::string& root) {
  g.check();
  if (tokens.empty()) throw NotInLanguageError("empty sequence is not in the language", 0);
  SpanTable chart(g, tokens, {root});
  if (!chart.derivable(root, 0, tokens.size())) {
    std::size_t prefix = 0;
    for (std::size_t j = tokens.size(); j > 0; --j) {
      if (chart.derivable(root, 0, j)) {
        prefix = j;
        break;
      }
    }
    throw NotInLanguageError("sequence not derivable from '" + root + "' (recognized prefix: " +
                                 std::to_string(prefix) + " tokens)",
                             prefix);
  }
  return chart.tree(root, 0, tokens.size());
}

ParseTree parse(const Grammar& g, const std::vector<std::string>& tokens) {
  return parse(g, tokens, g.start);
}

}  // namespace cfgowl
