#pragma once

#include "cfgowl/classify.hpp"

namespace cfgowl {

enum class Mode { Dl, Hybrid };

// One classification run with its per-component axiom counts and timing.
struct ModeResult {
  Mode mode = Mode::Dl;
  ClassificationReport report;
  double elapsed_ms = 0.0;
  std::size_t tbox_axioms = 0;
  std::size_t abox_axioms = 0;
  std::size_t alignment_axioms = 0;

  std::size_t total_axioms() const { return tbox_axioms + abox_axioms + alignment_axioms; }
};

// Runs one mode end to end. The report equals the corresponding
// classify_dl / classify_hybrid output exactly; brick_vars are ignored in
// DL mode.
ModeResult run(const Grammar& g, const std::vector<std::string>& tokens, Mode mode,
               const std::vector<std::string>& brick_vars, const ConversionConfig& cfg,
               const ClassifyOptions& opts = {});

}  // namespace cfgowl
