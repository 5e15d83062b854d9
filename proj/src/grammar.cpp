#include "cfgowl/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cfgowl {

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << (d.severity == Severity::Error ? "error" : "warning");
  if (d.line != 0) {
    os << " at " << d.line;
    if (d.column != 0) os << ":" << d.column;
  }
  os << ": " << d.message;
  return os.str();
}

std::string InputError::format(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  std::ostringstream os;
  os << "line " << line;
  if (column != 0) os << ":" << column;
  os << ": " << what;
  return os.str();
}

bool Grammar::is_variable(const std::string& name) const {
  return variable_index_.count(name) != 0;
}

bool Grammar::is_terminal(const std::string& text) const {
  return terminal_set_.count(text) != 0;
}

std::size_t Grammar::variable_index(const std::string& name) const {
  auto it = variable_index_.find(name);
  return it == variable_index_.end() ? static_cast<std::size_t>(-1) : it->second;
}

bool Grammar::add_production(Production p) {
  if (!production_set_.insert(p).second) return false;
  if (!is_variable(p.lhs)) {
    variable_index_.emplace(p.lhs, variables.size());
    variables.push_back(p.lhs);
  }
  for (const Symbol& s : p.rhs) {
    if (s.is_terminal() && terminal_set_.insert(s.text).second) {
      terminals.push_back(s.text);
    }
  }
  productions.push_back(std::move(p));
  return true;
}

bool Grammar::is_relaxed_cnf() const {
  for (const Production& p : productions) {
    if (p.is_terminal_rule()) continue;
    if (!p.is_binary()) return false;
  }
  return true;
}

bool Grammar::is_strict_cnf() const {
  for (const Production& p : productions) {
    if (p.is_terminal_rule()) continue;
    if (!p.is_binary()) return false;
    if (!p.rhs[0].is_variable() || !p.rhs[1].is_variable()) return false;
  }
  return true;
}

void Grammar::check() const {
  if (variables.empty() && terminals.empty() && productions.empty() && start.empty())
    return;  // the degenerate empty grammar is allowed
  if (!is_variable(start)) throw InputError("start symbol '" + start + "' is not a variable");
  for (const Production& p : productions) {
    if (!is_variable(p.lhs)) throw InputError("production lhs '" + p.lhs + "' is not a variable");
    if (p.rhs.empty()) throw InputError("empty right-hand side in production of '" + p.lhs + "'");
    for (const Symbol& s : p.rhs) {
      if (s.is_variable() && !is_variable(s.text))
        throw InputError("undeclared variable '" + s.text + "' in production of '" + p.lhs + "'");
      if (s.is_terminal() && !is_terminal(s.text))
        throw InputError("unregistered terminal in production of '" + p.lhs + "'");
      if (s.text.empty()) throw InputError("empty symbol in production of '" + p.lhs + "'");
    }
  }
  for (const std::string& b : bricks) {
    if (!is_variable(b)) throw InputError("brick '" + b + "' is not a variable");
  }
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
  enum class Kind { Ident, Quoted, Arrow, Pipe, Colon };
  Kind kind;
  std::string text;
  std::size_t column;  // 1-based
};

// Tokenizes one logical line. `#` starts a comment unless inside quotes.
std::vector<Token> lex_line(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;  // comment to end of line
    std::size_t col = i + 1;
    if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i];
        if (d == '\\') {
          if (i + 1 >= line.size()) throw InputError("dangling escape in terminal", line_no, i + 1);
          char e = line[i + 1];
          if (e != '"' && e != '\\')
            throw InputError("unsupported escape '\\" + std::string(1, e) + "'", line_no, i + 1);
          text.push_back(e);
          i += 2;
        } else if (d == '"') {
          ++i;
          closed = true;
          break;
        } else {
          text.push_back(d);
          ++i;
        }
      }
      if (!closed) throw InputError("unterminated terminal quote", line_no, col);
      if (text.empty()) throw InputError("empty terminal", line_no, col);
      out.push_back({Token::Kind::Quoted, std::move(text), col});
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->", col});
      i += 2;
    } else if (c == '|') {
      out.push_back({Token::Kind::Pipe, "|", col});
      ++i;
    } else if (c == ':') {
      out.push_back({Token::Kind::Colon, ":", col});
      ++i;
    } else if (c == ',') {
      ++i;  // commas are separators in directives, ignored elsewhere
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      out.push_back({Token::Kind::Ident, line.substr(i, j - i), col});
      i = j;
    } else {
      throw InputError("unexpected character '" + std::string(1, c) + "'", line_no, col);
    }
  }
  return out;
}

struct RawAlt {
  std::vector<Token> symbols;
  std::size_t line;
};

struct RawRule {
  std::string lhs;
  std::size_t line;
  std::vector<RawAlt> alts;
};

}  // namespace

Grammar parse_grammar(const std::string& text) {
  std::vector<RawRule> rules;
  std::string start_directive;
  std::vector<std::string> bricks_directive;
  std::size_t start_line = 0;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> toks = lex_line(line, line_no);
    if (toks.empty()) continue;

    // Continuation: a line starting with `|` extends the previous rule.
    if (toks[0].kind == Token::Kind::Pipe) {
      if (rules.empty()) throw InputError("continuation line without a rule", line_no, toks[0].column);
      std::size_t i = 0;
      while (i < toks.size()) {
        if (toks[i].kind != Token::Kind::Pipe)
          throw InputError("expected '|' between alternatives", line_no, toks[i].column);
        ++i;
        RawAlt alt{{}, line_no};
        while (i < toks.size() && toks[i].kind != Token::Kind::Pipe) {
          if (toks[i].kind != Token::Kind::Ident && toks[i].kind != Token::Kind::Quoted)
            throw InputError("unexpected token in alternative", line_no, toks[i].column);
          alt.symbols.push_back(toks[i]);
          ++i;
        }
        if (alt.symbols.empty()) throw InputError("empty alternative", line_no);
        rules.back().alts.push_back(std::move(alt));
      }
      continue;
    }

    if (toks[0].kind != Token::Kind::Ident)
      throw InputError("expected rule or directive", line_no, toks[0].column);

    // Directives: `start: X` and `bricks: A, B, ...`
    if (toks.size() >= 2 && toks[1].kind == Token::Kind::Colon) {
      const std::string& name = toks[0].text;
      if (name == "start") {
        if (toks.size() != 3 || toks[2].kind != Token::Kind::Ident)
          throw InputError("start directive expects one variable", line_no);
        if (!start_directive.empty()) throw InputError("duplicate start directive", line_no);
        start_directive = toks[2].text;
        start_line = line_no;
        continue;
      }
      if (name == "bricks") {
        if (toks.size() < 3) throw InputError("bricks directive expects variables", line_no);
        for (std::size_t i = 2; i < toks.size(); ++i) {
          if (toks[i].kind != Token::Kind::Ident)
            throw InputError("bricks directive expects variables", line_no, toks[i].column);
          bricks_directive.push_back(toks[i].text);
        }
        continue;
      }
      throw InputError("unknown directive '" + name + "'", line_no);
    }

    // Rule line: LHS -> alt (| alt)*
    if (toks.size() < 3 || toks[1].kind != Token::Kind::Arrow)
      throw InputError("expected '->' after rule head", line_no, toks.size() > 1 ? toks[1].column : 1);
    RawRule rule{toks[0].text, line_no, {}};
    std::size_t i = 2;
    RawAlt alt{{}, line_no};
    for (; i < toks.size(); ++i) {
      if (toks[i].kind == Token::Kind::Pipe) {
        if (alt.symbols.empty()) throw InputError("empty alternative", line_no, toks[i].column);
        rule.alts.push_back(std::move(alt));
        alt = RawAlt{{}, line_no};
      } else if (toks[i].kind == Token::Kind::Ident || toks[i].kind == Token::Kind::Quoted) {
        alt.symbols.push_back(toks[i]);
      } else {
        throw InputError("unexpected token in rule body", line_no, toks[i].column);
      }
    }
    if (alt.symbols.empty()) throw InputError("empty alternative", line_no);
    rule.alts.push_back(std::move(alt));
    rules.push_back(std::move(rule));
  }

  if (rules.empty()) throw InputError("empty grammar");

  // All left-hand sides are variables; everything bare on a rhs must be one.
  std::unordered_set<std::string> lhs_names;
  for (const RawRule& r : rules) lhs_names.insert(r.lhs);

  Grammar g;
  for (const RawRule& r : rules) {
    for (const RawAlt& a : r.alts) {
      Production p;
      p.lhs = r.lhs;
      for (const Token& t : a.symbols) {
        if (t.kind == Token::Kind::Quoted) {
          p.rhs.push_back(Symbol::terminal(t.text));
        } else if (lhs_names.count(t.text)) {
          p.rhs.push_back(Symbol::variable(t.text));
        } else {
          throw InputError("undeclared variable '" + t.text + "' (no rule defines it)", a.line,
                           t.column);
        }
      }
      if (!g.add_production(std::move(p))) {
        g.diagnostics.push_back({Severity::Warning,
                                 "duplicate production for '" + r.lhs + "' dropped", a.line, 0});
      }
    }
  }

  if (!start_directive.empty()) {
    if (!g.is_variable(start_directive))
      throw InputError("start symbol '" + start_directive + "' has no rule", start_line);
    g.start = start_directive;
  } else {
    g.start = g.productions.front().lhs;
  }

  for (const std::string& b : bricks_directive) {
    if (!g.is_variable(b)) throw InputError("brick '" + b + "' has no rule");
    if (std::find(g.bricks.begin(), g.bricks.end(), b) == g.bricks.end()) g.bricks.push_back(b);
  }

  g.check();
  return g;
}

namespace {

std::string quote_terminal(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string symbol_text(const Symbol& s) {
  return s.is_terminal() ? quote_terminal(s.text) : s.text;
}

}  // namespace

std::string serialize_grammar(const Grammar& g) {
  std::ostringstream os;
  os << "start: " << g.start << "\n";
  if (!g.bricks.empty()) {
    os << "bricks:";
    for (std::size_t i = 0; i < g.bricks.size(); ++i) os << (i ? ", " : " ") << g.bricks[i];
    os << "\n";
  }
  os << "\n";
  // Group alternatives by lhs in first-appearance order, alternatives in
  // production order.
  for (const std::string& v : g.variables) {
    bool first = true;
    for (const Production& p : g.productions) {
      if (p.lhs != v) continue;
      if (first) {
        os << v << " ->";
        first = false;
      } else {
        os << "\n  |";
      }
      for (const Symbol& s : p.rhs) os << " " << symbol_text(s);
    }
    if (!first) os << "\n";
  }
  return os.str();
}

namespace detail {

// Variables that derive at least one terminal string.
std::unordered_set<std::string> productive_variables(const Grammar& g) {
  std::unordered_set<std::string> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Production& p : g.productions) {
      if (productive.count(p.lhs)) continue;
      bool ok = true;
      for (const Symbol& s : p.rhs) {
        if (s.is_variable() && !productive.count(s.text)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        productive.insert(p.lhs);
        changed = true;
      }
    }
  }
  return productive;
}

// Symbols reachable from the start variable. Keys are kind-tagged because a
// terminal may share its text with a variable.
std::set<Symbol> reachable_symbols(const Grammar& g) {
  std::set<Symbol> reachable{Symbol::variable(g.start)};
  std::vector<std::string> work{g.start};
  while (!work.empty()) {
    std::string v = work.back();
    work.pop_back();
    for (const Production& p : g.productions) {
      if (p.lhs != v) continue;
      for (const Symbol& s : p.rhs) {
        if (reachable.insert(s).second && s.is_variable()) work.push_back(s.text);
      }
    }
  }
  return reachable;
}

}  // namespace detail

std::vector<Diagnostic> validate(const Grammar& g) {
  std::vector<Diagnostic> out = g.diagnostics;

  if (!g.is_variable(g.start)) {
    out.push_back({Severity::Error, "start symbol '" + g.start + "' is not a variable", 0, 0});
    return out;
  }

  auto productive = detail::productive_variables(g);
  if (!productive.count(g.start)) {
    out.push_back(
        {Severity::Error, "unproductive start: '" + g.start + "' derives no terminal string", 0, 0});
  }

  auto reachable = detail::reachable_symbols(g);
  for (const std::string& v : g.variables) {
    if (!reachable.count(Symbol::variable(v)))
      out.push_back({Severity::Warning, "unreachable variable '" + v + "'", 0, 0});
  }
  for (const std::string& t : g.terminals) {
    if (!reachable.count(Symbol::terminal(t)))
      out.push_back({Severity::Warning, "unreachable terminal \"" + t + "\"", 0, 0});
  }
  return out;
}

}  // namespace cfgowl
