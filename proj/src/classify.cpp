#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cfgowl/classify.hpp"

namespace cfgowl {

bool ReportRow::has_class_display(const std::string& display) const {
  for (const ClassName& c : classes) {
    if (c.display == display) return true;
  }
  return false;
}

namespace {

// Short names for report output: decoded local name under the base,
// prefix:decoded-local under a registered prefix, else the full IRI.
class DisplayNames {
 public:
  DisplayNames(const ConversionConfig& cfg, const std::vector<Ontology>& alignments) {
    base_ = cfg.base.value + "#";
    for (const Ontology& o : alignments) {
      for (const auto& [prefix, ns] : o.prefixes()) prefixes_.emplace_back(prefix, ns);
    }
  }

  std::string operator()(const std::string& iri) const {
    if (iri.starts_with(base_)) return percent_decode(iri.substr(base_.size()));
    for (const auto& [prefix, ns] : prefixes_) {
      if (iri.starts_with(ns)) return prefix + ":" + percent_decode(iri.substr(ns.size()));
    }
    return iri;
  }

 private:
  std::string base_;
  std::vector<std::pair<std::string, std::string>> prefixes_;
};

ClassificationReport build_report(const std::string& mode, const SequenceAbox& abox,
                                  const FactBase& facts, const ConversionConfig& cfg,
                                  const ClassifyOptions& opts) {
  DisplayNames display(cfg, opts.alignments);
  ClassificationReport report;
  report.mode = mode;
  report.scaffolding_included = opts.include_scaffolding;

  const std::string scaffold_one = cfg.scaffold_class_one().value;
  const std::string scaffold_two = cfg.scaffold_class_two().value;

  for (std::size_t i = 0; i < abox.individuals.size(); ++i) {
    ReportRow row;
    row.position = i;
    row.token = abox.tokens[i];
    row.individual = abox.individuals[i];
    row.individual_display = display(row.individual.value);
    for (const std::string& cls : facts.classes_of(row.individual.value)) {
      if (!facts.declared_classes().count(cls)) continue;
      if (!opts.include_scaffolding && (cls == scaffold_one || cls == scaffold_two)) continue;
      row.classes.push_back({cls, display(cls)});
    }
    std::sort(row.classes.begin(), row.classes.end(),
              [](const ClassName& a, const ClassName& b) {
                return a.display == b.display ? a.iri < b.iri : a.display < b.display;
              });
    row.classes.erase(std::unique(row.classes.begin(), row.classes.end()), row.classes.end());
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

ClassificationReport classify_dl(const Grammar& g, const std::vector<std::string>& tokens,
                                 const ConversionConfig& cfg, const ClassifyOptions& opts) {
  Ontology tbox = convert(g, cfg);
  SequenceAbox abox = build_sequence_abox(tokens, g, cfg);

  std::vector<const Ontology*> sources{&abox.ontology};
  for (const Ontology& a : opts.alignments) sources.push_back(&a);
  FactBase facts = materialize(tbox, sources, RuleSet::Full);

  return build_report("dl", abox, facts, cfg, opts);
}

namespace detail {

Ontology hybrid_tbox(const Grammar& g, const Segmentation& segmentation,
                     const ConversionConfig& cfg) {
  // Terminal rules of the grammar as subclass axioms, then the per-segment
  // tree axioms. Chains and rolifications stay out of the hybrid path.
  Ontology tbox(cfg.base);
  for (const std::string& v : g.variables)
    tbox.add({Axiom::Declaration{EntityKind::Class, cfg.symbol_class(v)}});
  for (const std::string& t : g.terminals)
    tbox.add({Axiom::Declaration{EntityKind::Class, cfg.symbol_class(t)}});
  for (const Production& p : g.productions) {
    if (!p.is_terminal_rule()) continue;
    Iri sub = cfg.symbol_class(p.rhs[0].text);
    Iri sup = cfg.symbol_class(p.lhs);
    tbox.add({Axiom::Declaration{EntityKind::Class, sub}});
    tbox.add({Axiom::Declaration{EntityKind::Class, sup}});
    tbox.add({Axiom::SubClassOf{ClassExpr::named(sub), ClassExpr::named(sup)}});
  }
  for (const ParseTree& segment : segmentation.segments) {
    tbox.merge(parse_tree_to_axioms(segment, cfg));
  }
  return tbox;
}

}  // namespace detail

ClassificationReport classify_hybrid(const Grammar& g, const std::vector<std::string>& brick_vars,
                                     const std::vector<std::string>& tokens,
                                     const ConversionConfig& cfg, const ClassifyOptions& opts) {
  g.check();
  if (!g.is_relaxed_cnf()) throw InputError("grammar not in relaxed CNF");

  Segmentation segmentation = segment_parse(g, brick_vars, tokens);
  Ontology tbox = detail::hybrid_tbox(g, segmentation, cfg);

  SequenceAbox abox = build_sequence_abox(tokens, g, cfg);
  std::vector<const Ontology*> sources{&abox.ontology};
  for (const Ontology& a : opts.alignments) sources.push_back(&a);
  FactBase facts = materialize(tbox, sources, RuleSet::SubclassOnly);

  ClassificationReport report = build_report("hybrid", abox, facts, cfg, opts);
  report.diagnostics = segmentation.diagnostics;
  return report;
}

std::string report_to_json(const ClassificationReport& report) {
  nlohmann::ordered_json doc;
  doc["mode"] = report.mode;
  doc["scaffolding_included"] = report.scaffolding_included;
  doc["positions"] = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::ordered_json entry;
    entry["position"] = row.position;
    entry["token"] = row.token;
    entry["individual"] = row.individual_display;
    entry["classes"] = nlohmann::ordered_json::array();
    for (const ClassName& c : row.classes) entry["classes"].push_back(c.display);
    doc["positions"].push_back(std::move(entry));
  }
  if (!report.diagnostics.empty()) {
    doc["warnings"] = nlohmann::ordered_json::array();
    for (const Diagnostic& d : report.diagnostics) doc["warnings"].push_back(d.message);
  }
  return doc.dump(2) + "\n";
}

std::string report_to_table(const ClassificationReport& report) {
  std::size_t width = 5;  // "Token"
  for (const ReportRow& row : report.rows) width = std::max(width, row.token.size());
  width += 2;

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "Token" << "Inferred classes\n";
  for (const ReportRow& row : report.rows) {
    os << std::left << std::setw(static_cast<int>(width)) << row.token;
    for (std::size_t i = 0; i < row.classes.size(); ++i)
      os << (i ? " " : "") << row.classes[i].display;
    os << "\n";
  }
  return os.str();
}

}  // namespace cfgowl
