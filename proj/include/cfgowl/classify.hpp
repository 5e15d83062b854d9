#pragma once

#include "cfgowl/abox.hpp"
#include "cfgowl/convert.hpp"
#include "cfgowl/grammar.hpp"
#include "cfgowl/materialize.hpp"

namespace cfgowl {

// A class as reported: full IRI plus the short display form (decoded local
// name under the base, prefix:name under a registered prefix).
struct ClassName {
  std::string iri;
  std::string display;

  bool operator==(const ClassName&) const = default;
};

struct ReportRow {
  std::size_t position = 0;
  std::string token;
  Iri individual;
  std::string individual_display;
  std::vector<ClassName> classes;  // sorted by display name

  bool has_class_display(const std::string& display) const;
};

// Per-position classification, in sequence order.
struct ClassificationReport {
  std::string mode;  // "dl" or "hybrid"
  bool scaffolding_included = true;
  std::vector<ReportRow> rows;
  std::vector<Diagnostic> diagnostics;
};

struct ClassifyOptions {
  std::vector<Ontology> alignments;
  bool include_scaffolding = true;
};

// Convert + assert + saturate, report restricted to the sequence individuals.
// The grammar must be in relaxed CNF. Alignment ontologies participate in
// the saturation.
ClassificationReport classify_dl(const Grammar& g, const std::vector<std::string>& tokens,
                                 const ConversionConfig& cfg, const ClassifyOptions& opts = {});

// Segment, parse, emit subclass axioms per tree, then saturate subclass
// rules only over the assertions plus the grammar's terminal rules plus
// alignment subclass axioms.
ClassificationReport classify_hybrid(const Grammar& g, const std::vector<std::string>& brick_vars,
                                     const std::vector<std::string>& tokens,
                                     const ConversionConfig& cfg,
                                     const ClassifyOptions& opts = {});

// Deterministic renderings.
std::string report_to_json(const ClassificationReport& report);
std::string report_to_table(const ClassificationReport& report);

namespace detail {
// The hybrid TBox: the grammar's terminal rules as subclass axioms plus the
// per-segment tree axioms.
Ontology hybrid_tbox(const Grammar& g, const Segmentation& segmentation,
                     const ConversionConfig& cfg);
}  // namespace detail

}  // namespace cfgowl
