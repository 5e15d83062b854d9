#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfgowl/grammar.hpp"

namespace testutil {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline cfgowl::Grammar load_fixture_grammar(const std::string& name) {
  return cfgowl::parse_grammar(slurp(fixture_path(name)));
}

inline std::vector<std::string> load_fixture_sequence(const std::string& name) {
  std::vector<std::string> tokens;
  std::istringstream in(slurp(fixture_path(name)));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    tokens.push_back(line);
  }
  return tokens;
}

inline std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Random grammar with guaranteed-productive start; other variables may be
// unproductive or unreachable, which normalization must cope with.
inline cfgowl::Grammar random_grammar(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nv_dist(2, 6);
  std::uniform_int_distribution<int> np_dist(1, 3);
  std::uniform_int_distribution<int> len_dist(1, 3);
  std::uniform_int_distribution<int> term_dist(0, 2);
  std::bernoulli_distribution use_var(0.4);

  const std::vector<std::string> terminals = {"a", "b", "c"};
  int nv = nv_dist(rng);
  std::vector<std::string> vars;
  for (int i = 0; i < nv; ++i) vars.push_back("V" + std::to_string(i));
  std::uniform_int_distribution<int> var_dist(0, nv - 1);

  cfgowl::Grammar g;
  g.start = vars[0];
  // keep the start productive: one all-terminal rule
  g.add_production({vars[0], {cfgowl::Symbol::terminal(terminals[term_dist(rng)])}});
  for (int i = 0; i < nv; ++i) {
    int np = np_dist(rng);
    for (int p = 0; p < np; ++p) {
      cfgowl::Production prod;
      prod.lhs = vars[i];
      int len = len_dist(rng);
      for (int k = 0; k < len; ++k) {
        if (use_var(rng))
          prod.rhs.push_back(cfgowl::Symbol::variable(vars[var_dist(rng)]));
        else
          prod.rhs.push_back(cfgowl::Symbol::terminal(terminals[term_dist(rng)]));
      }
      g.add_production(std::move(prod));
    }
  }
  return g;
}

// Random grammar directly in strict CNF over terminals {a, b}.
inline cfgowl::Grammar random_strict_cnf_grammar(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nv_dist(2, 5);
  std::uniform_int_distribution<int> np_dist(1, 3);
  std::bernoulli_distribution binary(0.6);
  std::uniform_int_distribution<int> term_dist(0, 1);

  const std::vector<std::string> terminals = {"a", "b"};
  int nv = nv_dist(rng);
  std::vector<std::string> vars;
  for (int i = 0; i < nv; ++i) vars.push_back("V" + std::to_string(i));
  std::uniform_int_distribution<int> var_dist(0, nv - 1);

  cfgowl::Grammar g;
  g.start = vars[0];
  g.add_production({vars[0], {cfgowl::Symbol::terminal(terminals[term_dist(rng)])}});
  for (int i = 0; i < nv; ++i) {
    int np = np_dist(rng);
    for (int p = 0; p < np; ++p) {
      if (binary(rng)) {
        g.add_production({vars[i],
                          {cfgowl::Symbol::variable(vars[var_dist(rng)]),
                           cfgowl::Symbol::variable(vars[var_dist(rng)])}});
      } else {
        g.add_production({vars[i], {cfgowl::Symbol::terminal(terminals[term_dist(rng)])}});
      }
    }
  }
  return g;
}

// All strings over the alphabet with length in [1, max_len].
inline std::vector<std::vector<std::string>> all_strings(const std::vector<std::string>& alphabet,
                                                         std::size_t max_len) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::vector<std::string>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : frontier) {
      for (const auto& t : alphabet) {
        auto w = prefix;
        w.push_back(t);
        next.push_back(w);
        out.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Multiset of production keys, for order-insensitive grammar comparison.
inline std::multiset<std::string> production_multiset(const cfgowl::Grammar& g) {
  std::multiset<std::string> out;
  for (const auto& p : g.productions) {
    std::string key = p.lhs + " ->";
    for (const auto& s : p.rhs)
      key += (s.is_terminal() ? " t:" : " v:") + s.text;
    out.insert(key);
  }
  return out;
}

}  // namespace testutil
