#include "cfgowl/parser.hpp"

namespace cfgowl {

bool cyk_recognize(const Grammar& g, const std::vector<std::string>& tokens) {
  g.check();
  if (!g.is_strict_cnf()) throw InputError("CYK requires strict CNF");
  if (tokens.empty()) return false;

  const std::size_t n = tokens.size();
  const std::size_t nv = g.variables.size();
  // table[i][len-1] is the variable set deriving tokens[i, i+len)
  std::vector<std::vector<std::vector<bool>>> table(
      n, std::vector<std::vector<bool>>(n, std::vector<bool>(nv, false)));

  for (std::size_t i = 0; i < n; ++i) {
    for (const Production& p : g.productions) {
      if (p.is_terminal_rule() && p.rhs[0].text == tokens[i])
        table[i][0][g.variable_index(p.lhs)] = true;
    }
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      for (std::size_t split = 1; split < len; ++split) {
        for (const Production& p : g.productions) {
          if (!p.is_binary()) continue;
          std::size_t b = g.variable_index(p.rhs[0].text);
          std::size_t c = g.variable_index(p.rhs[1].text);
          if (table[i][split - 1][b] && table[i + split][len - split - 1][c])
            table[i][len - 1][g.variable_index(p.lhs)] = true;
        }
      }
    }
  }
  return table[0][n - 1][g.variable_index(g.start)];
}

}  // namespace cfgowl
