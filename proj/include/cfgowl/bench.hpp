#pragma once

#include <cstdint>

#include "cfgowl/classify.hpp"

namespace cfgowl {

// Controls the random-growth experiment: per iteration, `step` fresh
// variables are added, each with 1..10 alternatives; an alternative is
// binary over already-generated symbols with probability 0.8, otherwise a
// fresh terminal. Generated symbols stay unreachable from the original
// grammar and never hold on its sequences, so classifications are
// untouched as the grammar grows.
struct GrowthConfig {
  std::uint64_t seed = 0;
  std::size_t iterations = 20;
  std::size_t step = 5;
  std::size_t min_alternatives = 1;
  std::size_t max_alternatives = 10;
  double binary_probability = 0.8;
};

// One growth step; deterministic in (cfg.seed, iteration). Generated
// variables are named N<iteration>_<j>, generated terminals
// n<iteration>_<j>_<k>; the generator treats symbols matching those
// patterns as its sampling pool.
Grammar grow_grammar(const Grammar& g, const GrowthConfig& cfg, std::size_t iteration);

struct BenchRow {
  std::size_t iteration = 0;
  std::size_t productions_total = 0;
  std::size_t axioms_total = 0;  // conversion output plus the sequence abox
  double dl_time_ms = 0.0;
  double hybrid_time_ms = 0.0;
};

// Row 0 is the unmodified grammar; rows 1..iterations accumulate growth.
// Times are the median of five runs after one discarded warm-up.
std::vector<BenchRow> run_bench(const Grammar& g, const std::vector<std::string>& tokens,
                                const std::vector<std::string>& brick_vars,
                                const GrowthConfig& growth, const ConversionConfig& cfg);

// Header: iteration,productions_total,axioms_total,dl_time_ms,hybrid_time_ms
std::string rows_to_csv(const std::vector<BenchRow>& rows);

}  // namespace cfgowl
