#include <algorithm>
#include <random>
#include <thread>

#include "perfloc/freeprod.hpp"

namespace perfloc {

namespace {

struct PairOutcome {
  bool commuting = false;
  bool nontrivial_free = false;
  bool counterexample = false;
};

// Oracles only ever prove inequality, so using them to skip pairs that
// visibly fail to commute with [x,y] does not change the outcome.
PairOutcome examine(const GContext& ctx, const SyllableWord& x,
                    const SyllableWord& y,
                    std::span<const FiniteQuotientOracle> prefilter) {
  PairOutcome out;
  const SyllableWord c = sp_commutator(x, y);
  if (c.empty()) {
    out.commuting = true;
    return out;
  }
  const SyllableWord xc = x * c;
  const SyllableWord cx = c * x;
  const SyllableWord yc = y * c;
  const SyllableWord cy = c * y;
  for (const auto& o : prefilter) {
    if (o.distinguishes(xc, cx) || o.distinguishes(yc, cy)) return out;
  }
  if (!eq_in_G(ctx, xc, cx) || !eq_in_G(ctx, yc, cy)) return out;
  out.commuting = true;
  out.nontrivial_free = true;
  out.counterexample = !eq_in_G(ctx, c, SyllableWord(ctx.rank1, ctx.rank2));
  return out;
}

}  // namespace

ScanReport commute_lemma_scan(const GContext& ctx, const ScanOptions& options) {
  const std::size_t combined = ctx.rank1 + ctx.rank2;
  std::vector<SyllableWord> words;
  for (const Word& w : enumerate_words(combined, options.max_len)) {
    words.push_back(SyllableWord::from_combined(w, ctx.rank1, ctx.rank2));
  }

  std::vector<std::pair<SyllableWord, SyllableWord>> pairs;
  pairs.reserve(words.size() * words.size() + options.budget);
  for (const auto& x : words)
    for (const auto& y : words) pairs.emplace_back(x, y);

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> len(0, options.random_max_len);
  auto random_element = [&] {
    return SyllableWord::from_combined(random_word(combined, len(rng), rng),
                                       ctx.rank1, ctx.rank2);
  };
  for (std::size_t i = 0; i < options.budget; ++i) {
    SyllableWord x = random_element();
    SyllableWord y = random_element();
    pairs.emplace_back(std::move(x), std::move(y));
  }

  const std::vector<FiniteQuotientOracle> prefilter{
      FiniteQuotientOracle(ctx, 8, options.seed + 1),
      FiniteQuotientOracle(ctx, 8, options.seed + 2)};

  std::vector<PairOutcome> outcomes(pairs.size());
  const unsigned workers = std::max(1u, options.workers);
  auto run_slice = [&](unsigned worker) {
    for (std::size_t i = worker; i < pairs.size(); i += workers) {
      outcomes[i] = examine(ctx, pairs[i].first, pairs[i].second, prefilter);
    }
  };
  if (workers == 1) {
    run_slice(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_slice, w);
  }

  ScanReport report;
  report.ctx = ctx;
  report.options = options;
  report.pairs_tested = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.commuting) ++report.commuting_pairs_found;
    if (o.nontrivial_free) ++report.nontrivial_free_commutators;
    if (o.counterexample) {
      report.counterexamples.push_back({pairs[i].first, pairs[i].second});
    }
  }
  return report;
}

nlohmann::json to_json(const GContext& ctx) {
  return {{"rank1", ctx.rank1},
          {"rank2", ctx.rank2},
          {"u1", to_string(ctx.u1)},
          {"u2", to_string(ctx.u2)}};
}

nlohmann::json to_json(const ScanReport& report) {
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const auto& c : report.counterexamples) {
    counterexamples.push_back({{"x", to_string(c.x)}, {"y", to_string(c.y)}});
  }
  return {{"ctx", to_json(report.ctx)},
          {"max_len", report.options.max_len},
          {"budget", report.options.budget},
          {"seed", report.options.seed},
          {"random_max_len", report.options.random_max_len},
          {"pairs_tested", report.pairs_tested},
          {"commuting_pairs_found", report.commuting_pairs_found},
          {"nontrivial_free_commutators", report.nontrivial_free_commutators},
          {"counterexamples", std::move(counterexamples)}};
}

}  // namespace perfloc
