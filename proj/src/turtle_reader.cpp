#include <map>
#include <optional>

#include "cfgowl/owl_io.hpp"

namespace cfgowl {

namespace {

constexpr const char* kOwl = "http://www.w3.org/2002/07/owl#";
constexpr const char* kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr const char* kRdfs = "http://www.w3.org/2000/01/rdf-schema#";

struct Node {
  enum class Kind { Iri, Blank, Literal };
  Kind kind = Kind::Iri;
  std::string value;

  bool operator==(const Node&) const = default;
  bool is_iri(const std::string& v) const { return kind == Kind::Iri && value == v; }
};

struct Triple {
  Node subject, predicate, object;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  struct Token {
    enum class Kind { Iri, Pname, Punct, Keyword, Literal, End };
    Kind kind = Kind::End;
    std::string value;
    std::size_t line = 1;
  };

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (c == '<') {
      std::size_t end = text_.find('>', pos_);
      if (end == std::string::npos) throw InputError("unterminated IRI", line_);
      t.kind = Token::Kind::Iri;
      t.value = text_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return t;
    }
    if (c == '"') {
      std::string s;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        s.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) throw InputError("unterminated string", line_);
      ++pos_;
      // optional datatype / language tag, consumed and dropped
      if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '^') {
        pos_ += 2;
        Token dt = next();
        (void)dt;
      } else if (pos_ < text_.size() && text_[pos_] == '@') {
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      t.kind = Token::Kind::Literal;
      t.value = s;
      return t;
    }
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == ';' || c == ',') {
      t.kind = Token::Kind::Punct;
      t.value = std::string(1, c);
      ++pos_;
      return t;
    }
    if (c == '.') {
      // statement terminator (a dot inside a name is consumed by the name rule)
      t.kind = Token::Kind::Punct;
      t.value = ".";
      ++pos_;
      return t;
    }
    if (c == '@') {
      std::size_t start = pos_++;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      t.kind = Token::Kind::Keyword;
      t.value = text_.substr(start, pos_ - start);
      return t;
    }
    // name: prefixed name, 'a', boolean, or number
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      bool name_char = std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '-' ||
                       d == '%' || d == ':' || d == '.';
      if (!name_char) break;
      ++pos_;
    }
    if (pos_ == start) throw InputError("unexpected character in Turtle input", line_);
    std::string word = text_.substr(start, pos_ - start);
    // trailing dots are statement terminators, not name characters
    while (!word.empty() && word.back() == '.') {
      word.pop_back();
      --pos_;
    }
    if (word.empty()) {
      t.kind = Token::Kind::Punct;
      t.value = ".";
      ++pos_;
      return t;
    }
    t.kind = Token::Kind::Pname;
    t.value = word;
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

class TurtleParser {
 public:
  explicit TurtleParser(const std::string& text) : lexer_(text) { advance(); }

  void parse() {
    while (tok_.kind != Lexer::Token::Kind::End) {
      if (tok_.kind == Lexer::Token::Kind::Keyword && tok_.value == "@prefix") {
        advance();
        if (tok_.kind != Lexer::Token::Kind::Pname || tok_.value.back() != ':')
          throw InputError("expected prefix name", tok_.line);
        std::string prefix = tok_.value.substr(0, tok_.value.size() - 1);
        advance();
        if (tok_.kind != Lexer::Token::Kind::Iri)
          throw InputError("expected namespace IRI", tok_.line);
        prefixes_[prefix] = tok_.value;
        advance();
        expect_dot();
        continue;
      }
      if (tok_.kind == Lexer::Token::Kind::Keyword && tok_.value == "@base") {
        advance();
        if (tok_.kind != Lexer::Token::Kind::Iri) throw InputError("expected base IRI", tok_.line);
        advance();
        expect_dot();
        continue;
      }
      Node subject = parse_term();
      parse_predicate_object_list(subject);
      expect_dot();
    }
  }

  const std::vector<Triple>& triples() const { return triples_; }
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

 private:
  void advance() { tok_ = lexer_.next(); }

  void expect_dot() {
    if (tok_.kind != Lexer::Token::Kind::Punct || tok_.value != ".")
      throw InputError("expected '.'", tok_.line);
    advance();
  }

  Node fresh_blank() { return {Node::Kind::Blank, "b" + std::to_string(blank_counter_++)}; }

  Node resolve_pname(const std::string& pname, std::size_t line) {
    auto colon = pname.find(':');
    if (colon == std::string::npos) {
      if (pname == "a") return {Node::Kind::Iri, std::string(kRdf) + "type"};
      if (pname == "true" || pname == "false") return {Node::Kind::Literal, pname};
      throw InputError("expected prefixed name, got '" + pname + "'", line);
    }
    std::string prefix = pname.substr(0, colon);
    std::string local = pname.substr(colon + 1);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw InputError("unknown prefix '" + prefix + ":'", line);
    return {Node::Kind::Iri, it->second + local};
  }

  // term := IRI | pname | 'a' | literal | [ ... ] | ( ... )
  Node parse_term() {
    if (tok_.kind == Lexer::Token::Kind::Iri) {
      Node n{Node::Kind::Iri, tok_.value};
      advance();
      return n;
    }
    if (tok_.kind == Lexer::Token::Kind::Literal) {
      Node n{Node::Kind::Literal, tok_.value};
      advance();
      return n;
    }
    if (tok_.kind == Lexer::Token::Kind::Pname) {
      Node n = resolve_pname(tok_.value, tok_.line);
      advance();
      return n;
    }
    if (tok_.kind == Lexer::Token::Kind::Punct && tok_.value == "[") {
      advance();
      Node blank = fresh_blank();
      if (!(tok_.kind == Lexer::Token::Kind::Punct && tok_.value == "]"))
        parse_predicate_object_list(blank);
      if (!(tok_.kind == Lexer::Token::Kind::Punct && tok_.value == "]"))
        throw InputError("expected ']'", tok_.line);
      advance();
      return blank;
    }
    if (tok_.kind == Lexer::Token::Kind::Punct && tok_.value == "(") {
      advance();
      std::vector<Node> items;
      while (!(tok_.kind == Lexer::Token::Kind::Punct && tok_.value == ")")) {
        if (tok_.kind == Lexer::Token::Kind::End) throw InputError("unterminated collection");
        items.push_back(parse_term());
      }
      advance();
      // materialize as an rdf list
      Node head{Node::Kind::Iri, std::string(kRdf) + "nil"};
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        Node cell = fresh_blank();
        triples_.push_back({cell, {Node::Kind::Iri, std::string(kRdf) + "first"}, *it});
        triples_.push_back({cell, {Node::Kind::Iri, std::string(kRdf) + "rest"}, head});
        head = cell;
      }
      return head;
    }
    throw InputError("unexpected token '" + tok_.value + "'", tok_.line);
  }

  void parse_predicate_object_list(const Node& subject) {
    while (true) {
      Node predicate = parse_term();
      if (predicate.kind != Node::Kind::Iri)
        throw InputError("predicate must be an IRI", tok_.line);
      while (true) {
        Node object = parse_term();
        triples_.push_back({subject, predicate, object});
        if (tok_.kind == Lexer::Token::Kind::Punct && tok_.value == ",") {
          advance();
          continue;
        }
        break;
      }
      if (tok_.kind == Lexer::Token::Kind::Punct && tok_.value == ";") {
        advance();
        // allow trailing ';' before ']' or '.'
        if (tok_.kind == Lexer::Token::Kind::Punct && (tok_.value == "]" || tok_.value == "."))
          break;
        continue;
      }
      break;
    }
  }

  Lexer lexer_;
  Lexer::Token tok_;
  std::vector<Triple> triples_;
  std::map<std::string, std::string> prefixes_;
  std::size_t blank_counter_ = 0;
};

// Reconstructs axioms from parsed triples (document order).
class AxiomBuilder {
 public:
  AxiomBuilder(const std::vector<Triple>& triples) : triples_(triples) {
    for (const Triple& t : triples_) {
      if (t.subject.kind == Node::Kind::Blank) blank_props_[t.subject.value].push_back(t);
    }
  }

  void run(Ontology& out) {
    const std::string rdf_type = std::string(kRdf) + "type";
    const std::string rdf_first = std::string(kRdf) + "first";
    const std::string rdf_rest = std::string(kRdf) + "rest";
    for (const Triple& t : triples_) {
      if (t.predicate.value == rdf_first || t.predicate.value == rdf_rest) continue;
      if (t.subject.kind == Node::Kind::Blank) {
        // blank subjects only surface as GCIs; everything else is an
        // expression internal that expr() walks on demand
        if (t.predicate.value == std::string(kRdfs) + "subClassOf")
          out.add({Axiom::SubClassOf{expr(t.subject), expr(t.object)}});
        continue;
      }
      if (t.subject.kind != Node::Kind::Iri) continue;
      Iri subject(t.subject.value);

      if (t.predicate.value == rdf_type) {
        if (t.object.is_iri(std::string(kOwl) + "Class")) {
          out.add({Axiom::Declaration{EntityKind::Class, subject}});
        } else if (t.object.is_iri(std::string(kOwl) + "ObjectProperty")) {
          out.add({Axiom::Declaration{EntityKind::ObjectProperty, subject}});
        } else if (t.object.is_iri(std::string(kOwl) + "NamedIndividual")) {
          out.add({Axiom::Declaration{EntityKind::NamedIndividual, subject}});
        } else if (t.object.is_iri(std::string(kOwl) + "Ontology") ||
                   t.object.is_iri(std::string(kOwl) + "Restriction")) {
          // header / stray typing, not an axiom
        } else {
          out.add({Axiom::ClassAssertion{expr(t.object), subject}});
        }
        continue;
      }
      if (t.predicate.value == std::string(kRdfs) + "subClassOf") {
        out.add({Axiom::SubClassOf{ClassExpr::named(subject), expr(t.object)}});
        continue;
      }
      if (t.predicate.value == std::string(kOwl) + "equivalentClass") {
        out.add({Axiom::EquivalentClasses{ClassExpr::named(subject), expr(t.object)}});
        continue;
      }
      if (t.predicate.value == std::string(kOwl) + "propertyChainAxiom") {
        std::vector<PropertyTerm> chain;
        for (const Node& item : list_items(t.object)) chain.push_back(property_term(item));
        out.add({Axiom::SubPropertyChainOf{std::move(chain), subject}});
        continue;
      }
      if (t.predicate.value.starts_with(kOwl) || t.predicate.value.starts_with(kRdfs) ||
          t.predicate.value.starts_with(kRdf)) {
        continue;  // unmodeled vocabulary
      }
      if (t.object.kind == Node::Kind::Iri) {
        out.add({Axiom::ObjectPropertyAssertion{Iri(t.predicate.value), subject,
                                                Iri(t.object.value)}});
      }
    }
  }

 private:
  std::optional<Node> blank_value(const Node& blank, const std::string& predicate) const {
    auto it = blank_props_.find(blank.value);
    if (it == blank_props_.end()) return std::nullopt;
    for (const Triple& t : it->second) {
      if (t.predicate.value == predicate) return t.object;
    }
    return std::nullopt;
  }

  std::vector<Node> list_items(const Node& head) const {
    std::vector<Node> out;
    Node cur = head;
    const std::string nil = std::string(kRdf) + "nil";
    while (!(cur.kind == Node::Kind::Iri && cur.value == nil)) {
      auto first = blank_value(cur, std::string(kRdf) + "first");
      auto rest = blank_value(cur, std::string(kRdf) + "rest");
      if (!first || !rest) throw InputError("malformed RDF list");
      out.push_back(*first);
      cur = *rest;
    }
    return out;
  }

  PropertyTerm property_term(const Node& n) const {
    if (n.kind == Node::Kind::Iri) return {Iri(n.value), false};
    if (n.kind == Node::Kind::Blank) {
      auto inv = blank_value(n, std::string(kOwl) + "inverseOf");
      if (inv && inv->kind == Node::Kind::Iri) return {Iri(inv->value), true};
    }
    throw InputError("unsupported property term in chain");
  }

  ClassExpr expr(const Node& n) const {
    if (n.kind == Node::Kind::Iri) {
      if (n.value == std::string(kOwl) + "Thing") return ClassExpr::thing();
      return ClassExpr::named(Iri(n.value));
    }
    if (n.kind != Node::Kind::Blank) throw InputError("literal used as class expression");
    if (auto p = blank_value(n, std::string(kOwl) + "onProperty")) {
      if (auto self = blank_value(n, std::string(kOwl) + "hasSelf");
          self && self->kind == Node::Kind::Literal && self->value == "true") {
        return ClassExpr::has_self(Iri(p->value));
      }
      if (auto filler = blank_value(n, std::string(kOwl) + "someValuesFrom")) {
        return ClassExpr::some_values_from(Iri(p->value), expr(*filler));
      }
    }
    if (auto u = blank_value(n, std::string(kOwl) + "unionOf")) {
      std::vector<ClassExpr> ops;
      for (const Node& item : list_items(*u)) ops.push_back(expr(item));
      return ClassExpr::union_of(std::move(ops));
    }
    if (auto i = blank_value(n, std::string(kOwl) + "intersectionOf")) {
      std::vector<ClassExpr> ops;
      for (const Node& item : list_items(*i)) ops.push_back(expr(item));
      return ClassExpr::intersection_of(std::move(ops));
    }
    throw InputError("unsupported class expression in Turtle input");
  }

  const std::vector<Triple>& triples_;
  std::map<std::string, std::vector<Triple>> blank_props_;
};

}  // namespace

Ontology read_turtle(const std::string& text) {
  TurtleParser parser(text);
  parser.parse();

  Ontology out;
  for (const auto& [prefix, ns] : parser.prefixes()) {
    if (prefix.empty()) {
      // default prefix doubles as the ontology base (namespace minus '#')
      std::string base = ns;
      if (!base.empty() && base.back() == '#') base.pop_back();
      out.set_base(Iri(base));
      continue;
    }
    if (prefix == "owl" || prefix == "rdf" || prefix == "rdfs" || prefix == "xsd") continue;
    out.add_prefix(prefix, ns);
  }
  AxiomBuilder builder(parser.triples());
  builder.run(out);
  return out;
}

}  // namespace cfgowl
