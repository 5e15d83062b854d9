#include <chrono>

#include "cfgowl/pipeline.hpp"

namespace cfgowl {

ModeResult run(const Grammar& g, const std::vector<std::string>& tokens, Mode mode,
               const std::vector<std::string>& brick_vars, const ConversionConfig& cfg,
               const ClassifyOptions& opts) {
  ModeResult result;
  result.mode = mode;

  auto start = std::chrono::steady_clock::now();
  if (mode == Mode::Dl) {
    result.report = classify_dl(g, tokens, cfg, opts);
  } else {
    result.report = classify_hybrid(g, brick_vars, tokens, cfg, opts);
  }
  auto stop = std::chrono::steady_clock::now();
  result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (mode == Mode::Dl) {
    result.tbox_axioms = count_axioms(convert(g, cfg));
  } else {
    Segmentation segmentation = segment_parse(g, brick_vars, tokens);
    result.tbox_axioms = count_axioms(detail::hybrid_tbox(g, segmentation, cfg));
  }
  result.abox_axioms = count_axioms(sequence_to_abox(tokens, g, cfg));
  for (const Ontology& a : opts.alignments) result.alignment_axioms += count_axioms(a);
  return result;
}

}  // namespace cfgowl
