#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <regex>
#include <sstream>

#include "cfgowl/bench.hpp"
#include "cfgowl/convert.hpp"

namespace cfgowl {

namespace {

bool generated_variable(const std::string& name) {
  static const std::regex pattern("^N[0-9]+_[0-9]+$");
  return std::regex_match(name, pattern);
}

bool generated_terminal(const std::string& text) {
  static const std::regex pattern("^n[0-9]+_[0-9]+_[0-9]+$");
  return std::regex_match(text, pattern);
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

template <typename F>
double timed_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

Grammar grow_grammar(const Grammar& g, const GrowthConfig& cfg, std::size_t iteration) {
  g.check();
  std::seed_seq seed{cfg.seed, static_cast<std::uint64_t>(iteration)};
  std::mt19937_64 rng(seed);

  Grammar result = g;

  // Sampling pool: everything this generator produced in earlier iterations,
  // variables first, then terminals, each in registration order.
  std::vector<Symbol> pool;
  for (const std::string& v : g.variables) {
    if (generated_variable(v)) pool.push_back(Symbol::variable(v));
  }
  for (const std::string& t : g.terminals) {
    if (generated_terminal(t)) pool.push_back(Symbol::terminal(t));
  }

  std::uniform_int_distribution<std::size_t> alt_count(cfg.min_alternatives,
                                                       cfg.max_alternatives);
  std::bernoulli_distribution binary(cfg.binary_probability);

  for (std::size_t j = 0; j < cfg.step; ++j) {
    std::string var = "N" + std::to_string(iteration) + "_" + std::to_string(j);
    std::size_t alternatives = alt_count(rng);
    for (std::size_t k = 0; k < alternatives; ++k) {
      bool make_binary = binary(rng);
      if (make_binary && !pool.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        Symbol a = pool[pick(rng)];
        Symbol b = pool[pick(rng)];
        result.add_production({var, {a, b}});  // duplicates silently skipped
      } else {
        std::string text = "n" + std::to_string(iteration) + "_" + std::to_string(j) + "_" +
                           std::to_string(k);
        result.add_production({var, {Symbol::terminal(text)}});
        pool.push_back(Symbol::terminal(text));
      }
    }
    pool.push_back(Symbol::variable(var));
  }
  result.check();
  return result;
}

std::vector<BenchRow> run_bench(const Grammar& g, const std::vector<std::string>& tokens,
                                const std::vector<std::string>& brick_vars,
                                const GrowthConfig& growth, const ConversionConfig& cfg) {
  std::vector<BenchRow> rows;
  Grammar current = g;
  for (std::size_t iteration = 0; iteration <= growth.iterations; ++iteration) {
    if (iteration > 0) current = grow_grammar(current, growth, iteration);

    BenchRow row;
    row.iteration = iteration;
    row.productions_total = current.productions.size();
    row.axioms_total =
        count_axioms(convert(current, cfg)) + count_axioms(sequence_to_abox(tokens, current, cfg));

    ClassifyOptions opts;
    std::vector<double> dl_times, hybrid_times;
    (void)classify_dl(current, tokens, cfg, opts);  // warm-up, discarded
    for (int r = 0; r < 5; ++r)
      dl_times.push_back(timed_ms([&] { (void)classify_dl(current, tokens, cfg, opts); }));
    (void)classify_hybrid(current, brick_vars, tokens, cfg, opts);
    for (int r = 0; r < 5; ++r)
      hybrid_times.push_back(
          timed_ms([&] { (void)classify_hybrid(current, brick_vars, tokens, cfg, opts); }));
    row.dl_time_ms = median_of(dl_times);
    row.hybrid_time_ms = median_of(hybrid_times);
    rows.push_back(row);
  }
  return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "iteration,productions_total,axioms_total,dl_time_ms,hybrid_time_ms\n";
  os << std::fixed << std::setprecision(3);
  for (const BenchRow& r : rows) {
    os << r.iteration << "," << r.productions_total << "," << r.axioms_total << ","
       << r.dl_time_ms << "," << r.hybrid_time_ms << "\n";
  }
  return os.str();
}

}  // namespace cfgowl
