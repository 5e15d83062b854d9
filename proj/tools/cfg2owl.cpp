#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cfgowl/bench.hpp"
#include "cfgowl/classify.hpp"
#include "cfgowl/owl_io.hpp"
#include "cfgowl/pipeline.hpp"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cfgowl::InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cfgowl::InputError("cannot write '" + path + "'");
  out << content;
}

// Sequence files: whitespace-separated tokens, double quotes for tokens with
// embedded whitespace, `#` starts a comment at the start of a word.
std::vector<std::string> parse_sequence(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto at_word_start = [&](std::size_t pos) {
    return pos == 0 || std::isspace(static_cast<unsigned char>(text[pos - 1]));
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#' && at_word_start(i)) {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '"') {
      std::string token;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        if (text[i] == '\\' && i + 1 < text.size()) {
          token.push_back(text[i + 1]);
          i += 2;
        } else if (text[i] == '"') {
          ++i;
          closed = true;
          break;
        } else {
          token.push_back(text[i++]);
        }
      }
      if (!closed) throw cfgowl::InputError("unterminated quote in sequence file");
      tokens.push_back(token);
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_warnings(const std::vector<cfgowl::Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) std::cerr << cfgowl::to_string(d) << "\n";
}

struct CommonOptions {
  std::string base = "http://example.org/grammar";
  std::string next_iri;
  bool no_inverse = false;

  cfgowl::ConversionConfig config() const {
    cfgowl::ConversionConfig cfg;
    cfg.base = cfgowl::Iri(base);
    if (!next_iri.empty()) cfg.next_property = cfgowl::Iri(next_iri);
    cfg.include_inverse_chains = !no_inverse;
    return cfg;
  }
};

int cmd_normalize(const std::string& grammar_path, const std::string& mode,
                  const std::string& out_path, std::size_t verify_upto) {
  cfgowl::Grammar g = cfgowl::parse_grammar(slurp(grammar_path));
  print_warnings(cfgowl::validate(g));
  cfgowl::CnfMode cnf_mode =
      mode == "strict" ? cfgowl::CnfMode::Strict : cfgowl::CnfMode::Relaxed;
  cfgowl::Grammar normalized = cfgowl::to_cnf(g, cnf_mode);
  print_warnings(normalized.diagnostics);
  if (verify_upto > 0) {
    if (cfgowl::enumerate_language(g, verify_upto) !=
        cfgowl::enumerate_language(normalized, verify_upto)) {
      std::cerr << "normalization changed the language up to length " << verify_upto << "\n";
      return kExitInternalError;
    }
    std::cerr << "language preserved up to length " << verify_upto << "\n";
  }
  spill(out_path, cfgowl::serialize_grammar(normalized));
  return 0;
}

int cmd_convert(const std::string& grammar_path, const std::string& out_path,
                const std::string& format, const CommonOptions& common) {
  cfgowl::Grammar g = cfgowl::parse_grammar(slurp(grammar_path));
  for (const std::string& t : g.terminals) {
    if (t == "1" || t == "2")
      std::cerr << "warning: terminal \"" << t << "\" rolifies to property R_" << t
                << ", which is also a scaffolding property name\n";
  }
  cfgowl::Ontology o = cfgowl::convert(g, common.config());
  spill(out_path, format == "omn" ? cfgowl::serialize_manchester(o) : cfgowl::serialize_turtle(o));
  std::cerr << "wrote " << cfgowl::count_axioms(o) << " axioms\n";
  return 0;
}

int cmd_classify(const std::string& grammar_path, const std::string& sequence_path,
                 const std::string& mode, const std::string& bricks_flag,
                 const std::vector<std::string>& align_paths, bool no_scaffolding,
                 const std::string& out_path, const CommonOptions& common) {
  cfgowl::Grammar g = cfgowl::parse_grammar(slurp(grammar_path));
  std::vector<std::string> tokens = parse_sequence(slurp(sequence_path));

  cfgowl::ClassifyOptions opts;
  opts.include_scaffolding = !no_scaffolding;
  for (const std::string& path : align_paths)
    opts.alignments.push_back(cfgowl::read_turtle(slurp(path)));

  std::vector<std::string> bricks = bricks_flag.empty() ? g.bricks : split_commas(bricks_flag);

  cfgowl::ClassificationReport report;
  if (mode == "hybrid") {
    report = cfgowl::classify_hybrid(g, bricks, tokens, common.config(), opts);
  } else {
    report = cfgowl::classify_dl(g, tokens, common.config(), opts);
  }
  print_warnings(report.diagnostics);
  std::cout << cfgowl::report_to_table(report);
  if (!out_path.empty()) spill(out_path, cfgowl::report_to_json(report));
  return 0;
}

int cmd_bench(const std::string& grammar_path, const std::string& sequence_path,
              std::size_t iterations, std::size_t step, std::uint64_t seed,
              const std::string& bricks_flag, const std::string& out_path,
              const CommonOptions& common) {
  cfgowl::Grammar g = cfgowl::parse_grammar(slurp(grammar_path));
  std::vector<std::string> tokens = parse_sequence(slurp(sequence_path));
  std::vector<std::string> bricks = bricks_flag.empty() ? g.bricks : split_commas(bricks_flag);

  cfgowl::GrowthConfig growth;
  growth.iterations = iterations;
  growth.step = step;
  growth.seed = seed;
  auto rows = cfgowl::run_bench(g, tokens, bricks, growth, common.config());
  std::string csv = cfgowl::rows_to_csv(rows);
  if (out_path.empty())
    std::cout << csv;
  else
    spill(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Context-free grammars as OWL ontologies: convert, assert, classify"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* normalize = app.add_subcommand("normalize", "Convert a grammar to normal form");
  std::string n_grammar, n_mode = "relaxed", n_out;
  std::size_t n_verify = 0;
  normalize->add_option("--grammar", n_grammar, "grammar file")->required();
  normalize->add_option("--mode", n_mode, "strict|relaxed")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  normalize->add_option("--out", n_out, "output grammar file")->required();
  normalize->add_option("--verify-upto", n_verify,
                        "check language preservation by enumeration up to this length");

  auto* convert = app.add_subcommand("convert", "Convert a relaxed-CNF grammar to an ontology");
  std::string c_grammar, c_out, c_format = "ttl";
  convert->add_option("--grammar", c_grammar, "grammar file")->required();
  convert->add_option("--out", c_out, "output ontology file")->required();
  convert->add_option("--format", c_format, "ttl|omn")->check(CLI::IsMember({"ttl", "omn"}));
  convert->add_option("--base", common.base, "base IRI");
  convert->add_option("--next-iri", common.next_iri, "successor property IRI");
  convert->add_flag("--no-inverse-chains", common.no_inverse,
                    "omit the inverse property chains");

  auto* classify = app.add_subcommand("classify", "Classify a sequence against a grammar");
  std::string s_grammar, s_sequence, s_mode = "dl", s_bricks, s_out;
  std::vector<std::string> s_align;
  bool s_no_scaffolding = false;
  classify->add_option("--grammar", s_grammar, "grammar file")->required();
  classify->add_option("--sequence", s_sequence, "sequence file")->required();
  classify->add_option("--mode", s_mode, "dl|hybrid")->check(CLI::IsMember({"dl", "hybrid"}));
  classify->add_option("--bricks", s_bricks, "comma-separated brick variables (hybrid mode)");
  classify->add_option("--align", s_align, "alignment ontology files (Turtle)");
  classify->add_flag("--no-scaffolding", s_no_scaffolding,
                     "drop VariableOne/VariableTwo from the report");
  classify->add_option("--out", s_out, "report JSON file");
  classify->add_option("--base", common.base, "base IRI");
  classify->add_option("--next-iri", common.next_iri, "successor property IRI");

  auto* bench = app.add_subcommand("bench", "Random-growth timing experiment");
  std::string b_grammar, b_sequence, b_bricks, b_out;
  std::size_t b_iterations = 20, b_step = 5;
  std::uint64_t b_seed = 0;
  bench->add_option("--grammar", b_grammar, "grammar file")->required();
  bench->add_option("--sequence", b_sequence, "sequence file")->required();
  bench->add_option("--iterations", b_iterations, "growth iterations");
  bench->add_option("--step", b_step, "new variables per iteration");
  bench->add_option("--seed", b_seed, "random seed");
  bench->add_option("--bricks", b_bricks, "comma-separated brick variables");
  bench->add_option("--out", b_out, "output CSV file");
  bench->add_option("--base", common.base, "base IRI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(n_grammar, n_mode, n_out, n_verify);
    if (convert->parsed()) return cmd_convert(c_grammar, c_out, c_format, common);
    if (classify->parsed())
      return cmd_classify(s_grammar, s_sequence, s_mode, s_bricks, s_align, s_no_scaffolding,
                          s_out, common);
    if (bench->parsed())
      return cmd_bench(b_grammar, b_sequence, b_iterations, b_step, b_seed, b_bricks, b_out,
                       common);
  } catch (const cfgowl::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cfgowl::NotInLanguageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return 0;
}
