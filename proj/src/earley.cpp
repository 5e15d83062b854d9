#include <set>
#include <sstream>

#include "cfgowl/parser.hpp"

namespace cfgowl {

std::vector<std::string> ParseTree::leaf_tokens() const {
  std::vector<std::string> out;
  if (is_leaf()) {
    out.push_back(label.text);
    return out;
  }
  for (const ParseTree& c : children) {
    auto sub = c.leaf_tokens();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string ParseTree::to_string() const {
  if (is_leaf()) return label.text;
  std::ostringstream os;
  os << label.text << "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) os << ", ";
    os << children[i].to_string();
  }
  os << ")";
  return os.str();
}

namespace {

struct Item {
  std::size_t production;
  std::size_t dot;
  std::size_t origin;

  auto operator<=>(const Item&) const = default;
};

}  // namespace

RecognizeResult recognize_ex(const Grammar& g, const std::vector<std::string>& tokens) {
  g.check();
  RecognizeResult result;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!g.is_terminal(tokens[i])) {
      result.diagnostics.push_back(
          {Severity::Warning, "token \"" + tokens[i] + "\" at position " + std::to_string(i) +
                                  " is not a terminal of the grammar"});
    }
  }

  const std::size_t n = tokens.size();
  std::vector<std::vector<Item>> chart(n + 1);
  std::vector<std::set<Item>> seen(n + 1);

  auto push = [&](std::size_t col, Item item) {
    if (seen[col].insert(item).second) chart[col].push_back(item);
  };

  for (std::size_t pi = 0; pi < g.productions.size(); ++pi) {
    if (g.productions[pi].lhs == g.start) push(0, {pi, 0, 0});
  }

  for (std::size_t col = 0; col <= n; ++col) {
    // chart[col] grows while we scan it
    for (std::size_t idx = 0; idx < chart[col].size(); ++idx) {
      Item item = chart[col][idx];
      const Production& prod = g.productions[item.production];
      if (item.dot == prod.rhs.size()) {
        // complete: advance every parent waiting on prod.lhs at the origin
        const auto& parents = chart[item.origin];
        for (std::size_t j = 0; j < parents.size(); ++j) {
          Item parent = parents[j];
          const Production& pp = g.productions[parent.production];
          if (parent.dot < pp.rhs.size() && pp.rhs[parent.dot].is_variable() &&
              pp.rhs[parent.dot].text == prod.lhs) {
            push(col, {parent.production, parent.dot + 1, parent.origin});
          }
        }
        continue;
      }
      const Symbol& next = prod.rhs[item.dot];
      if (next.is_variable()) {
        // predict
        for (std::size_t pi = 0; pi < g.productions.size(); ++pi) {
          if (g.productions[pi].lhs == next.text) push(col, {pi, 0, col});
        }
      } else if (col < n && next.text == tokens[col]) {
        // scan
        push(col + 1, {item.production, item.dot + 1, item.origin});
      }
    }
    if (!chart[col].empty()) result.recognized_prefix = col;
  }

  for (const Item& item : chart[n]) {
    const Production& prod = g.productions[item.production];
    if (item.origin == 0 && item.dot == prod.rhs.size() && prod.lhs == g.start) {
      result.accepted = true;
      break;
    }
  }
  return result;
}

bool recognize(const Grammar& g, const std::vector<std::string>& tokens) {
  return recognize_ex(g, tokens).accepted;
}

}  // namespace cfgowl
