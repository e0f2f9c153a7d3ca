// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "perfloc/cli.hpp"
#include "perfloc/errors.hpp"
#include "perfloc/freeprod.hpp"
#include "perfloc/suites.hpp"
#include "perfloc/tower.hpp"

using namespace perfloc;

namespace {

// Pinned thresholds. All comparisons below are exact.
constexpr double kTowerSecondsLimit = 120.0;
constexpr long kOrderPowers = 100;
constexpr unsigned kTowerMaxLevel = 6;
constexpr unsigned kLengthMaxLevel = 8;
constexpr std::size_t kHeisenbergMaxLen = 6;
constexpr std::size_t kKernelSamples = 1000;
constexpr std::size_t kKernelMaxLen = 24;
constexpr std::size_t kRewriteSamples = 500;
constexpr std::size_t kRewriteMaxLen = 6;
constexpr std::size_t kOracleDegree = 8;
constexpr std::size_t kOracleSeeds = 20;
constexpr std::size_t kExpansionSamples = 200;
constexpr std::size_t kConjMaxLen = 4;
constexpr std::size_t kScanMaxLen = 3;
constexpr std::size_t kScanBudget = 10000;
constexpr std::size_t kScanRandomLen = 6;
constexpr std::size_t kMinCommutingPairs = 50;
constexpr std::size_t kLpSamples = 1000;

struct Outcome {
  bool ok = true;
  std::string note;
};

GContext ab_cd() {
  return GContext::make(parse_word("x1 x2", 2), parse_word("x1 x2", 2));
}

Outcome tower_representation() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::ostringstream signs;
  for (unsigned n = 1; n <= kTowerMaxLevel; ++n) {
    const PsiReport r = verify_psi(n, 1);
    o.ok = o.ok && r.relations_ok;
    if (n == 1) o.ok = o.ok && r.sign == 1;
    signs << (n > 1 ? "," : "") << (r.sign > 0 ? "+" : "-");
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.ok = o.ok && secs < kTowerSecondsLimit;
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.2fs", secs);
  o.note = "signs " + signs.str() + buf;
  return o;
}

Outcome infinite_order() {
  Outcome o;
  for (unsigned n = 1; n <= kTowerMaxLevel; ++n) {
    const PsiReport r = verify_psi(n, kOrderPowers);
    const std::size_t d = level_rank(n) + 1;
    std::set<IntMatrix> seen;
    for (long k = 1; k <= kOrderPowers; ++k) {
      const IntMatrix p = matrix_power(r.x01_image, k);
      o.ok = o.ok && p == IntMatrix::elementary(r.sign * k, 1, d, d);
      seen.insert(p);
    }
    o.ok = o.ok && r.order_witness_ok && seen.size() == std::size_t(kOrderPowers);
  }
  o.note = "k = 1..100, n = 1..6";
  return o;
}

Outcome word_length_law() {
  Outcome o;
  for (unsigned n = 0; n <= kLengthMaxLevel; ++n)
    o.ok = o.ok && x01_word(n).size() == (std::size_t{1} << (2 * n));
  o.note = "|x01(8)| = " + std::to_string(x01_word(kLengthMaxLevel).size());
  return o;
}

Outcome perfectness() {
  Outcome o;
  for (unsigned n = 0; n <= kTowerMaxLevel; ++n) {
    const std::size_t r = level_rank(n);
    for (std::size_t i = 1; i <= r; ++i) {
      for (long s : exponent_sum(phi_apply(n, Word::generator(i, r)))) o.ok = o.ok && s == 0;
    }
    o.ok = o.ok && perfectness_witness(n).all_zero;
  }
  return o;
}

Outcome heisenberg_faithful() {
  const MatrixAssignment psi = psi_assignment(1);
  std::map<HeisenbergTriple, IntMatrix> by_nf;
  std::map<IntMatrix, HeisenbergTriple> by_image;
  std::size_t mismatches = 0, words = 0;
  for (const Word& w : enumerate_words(2, kHeisenbergMaxLen)) {
    ++words;
    const HeisenbergTriple t = heisenberg_nf(w);
    const IntMatrix m = evaluate_word(psi, w);
    const auto a = by_nf.emplace(t, m);
    if (!a.second && !(a.first->second == m)) ++mismatches;
    const auto b = by_image.emplace(m, t);
    if (!b.second && !(b.first->second == t)) ++mismatches;
  }
  return {mismatches == 0 && by_nf.size() == by_image.size(),
          std::to_string(words) + " words, " + std::to_string(by_nf.size()) +
              " classes, " + std::to_string(mismatches) + " mismatches"};
}

Outcome kernel_round_trip() {
  std::mt19937_64 rng(20240601);
  std::size_t failures = 0;
  for (std::size_t s = 0; s < kKernelSamples; ++s) {
    const SyllableWord w = random_kernel_word(2, 2, kKernelMaxLen, rng);
    const auto f = cartesian_basis_express(w);
    bool ok = expand_factors(f, 2, 2) == w;
    for (const auto& c : f) ok = ok && !c.v1.empty() && !c.v2.empty();
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures"};
}

Outcome commutator_rewriting() {
  const GContext ctx = ab_cd();
  std::vector<FiniteQuotientOracle> oracles;
  for (std::size_t i = 0; i < kOracleSeeds; ++i) oracles.emplace_back(ctx, kOracleDegree, 500 + i);
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> len(1, kRewriteMaxLen);
  std::size_t failures = 0, refutations = 0;
  for (std::size_t s = 0; s < kRewriteSamples; ++s) {
    Word w1(2), w2(2);
    while (w1.empty()) w1 = random_word(2, len(rng), rng);
    while (w2.empty()) w2 = random_word(2, len(rng), rng);
    const SyllableWord lhs = commutator_syllables(w1, w2);
    const SyllableWord rhs = expand_kword(rewrite_commutator(ctx, w1, w2), 2, 2);
    if (!eq_in_G(ctx, lhs, rhs)) ++failures;
    for (const auto& o : oracles) refutations += o.distinguishes(lhs, rhs);
    try {
      const auto r = relation_check(ctx, w1, w2, oracles);
      refutations += r.oracle_refutations;
    } catch (const VerificationFailure&) {
      ++failures;
    }
  }
  return {failures == 0 && refutations == 0,
          std::to_string(failures) + " failures, " + std::to_string(refutations) +
              " oracle refutations"};
}

Outcome conjugation_expansion() {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> nd(0, 4), fd(1, 3), ld(1, 4), sd(0, 1);
  std::size_t failures = 0;
  for (std::size_t s = 0; s < kExpansionSamples; ++s) {
    std::vector<CommutatorFactor> fs(fd(rng));
    for (auto& f : fs) {
      f.v1 = random_word(2, ld(rng), rng);
      f.v2 = random_word(2, ld(rng), rng);
      f.sign = sd(rng) ? 1 : -1;
    }
    const Word x1 = random_word(2, ld(rng), rng), x2 = random_word(2, ld(rng), rng);
    if (!conj_expansion_check(x1, x2, fs, nd(rng))) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures"};
}

Outcome conjugation_support() {
  const auto words = enumerate_words(2, kConjMaxLen);
  std::size_t pairs = 0, violations = 0;
  for (const Word& w : words) {
    if (!is_cyclically_reduced(w)) continue;
    for (const Word& g : words) {
      ++pairs;
      if (!conj_support_check(w, g)) ++violations;
    }
  }
  return {violations == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations"};
}

Outcome commute_scan() {
  Outcome o;
  ScanOptions opt;
  opt.max_len = kScanMaxLen;
  opt.budget = kScanBudget;
  opt.random_max_len = kScanRandomLen;
  opt.seed = 7;
  for (const GContext& ctx : {ab_cd(), split_Rn_context(2)}) {
    const ScanReport r = commute_lemma_scan(ctx, opt);
    o.ok = o.ok && r.counterexamples.empty() &&
           r.commuting_pairs_found >= kMinCommutingPairs;
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(r.pairs_tested) +
              " pairs, " + std::to_string(r.commuting_pairs_found) + " commuting, " +
              std::to_string(r.counterexamples.size()) + " counterexamples";
  }
  return o;
}

Outcome rn_splitting() {
  Outcome o;
  for (unsigned n = 2; n <= kTowerMaxLevel; ++n) {
    try {
      const GContext ctx = split_Rn_context(n);
      const std::size_t half = level_rank(n - 1);
      o.ok = o.ok && commutator(ctx.u1.relabel(2 * half), ctx.u2.relabel(2 * half, half)) ==
                         presentation_R(n).relators[0];
      o.ok = o.ok && primitive_root(ctx.u1).exponent == 1 &&
             primitive_root(ctx.u2).exponent == 1;
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = e.what();
    }
  }
  return o;
}

Outcome lp_non_perfect() {
  std::mt19937_64 rng(99);
  std::size_t bad_comm = 0, bad_add = 0;
  for (std::size_t s = 0; s < kLpSamples; ++s) {
    const LPElement a = random_lp_element(3, 6, rng), b = random_lp_element(3, 6, rng);
    if (lp_qz_image(lp_commutator(a, b)) != 0) ++bad_comm;
  }
  for (std::size_t s = 0; s < kLpSamples; ++s) {
    const LPElement a = random_lp_element(3, 6, rng), b = random_lp_element(3, 6, rng);
    mpq_class sum = lp_qz_image(a) + lp_qz_image(b);
    if (sum >= 1) sum -= 1;
    if (lp_qz_image(lp_multiply(a, b)) != sum) ++bad_add;
  }
  const mpq_class half = lp_qz_image(lp_make(0, Word(1), mpq_class(1, 2)));
  return {bad_comm == 0 && bad_add == 0 && half == mpq_class(1, 2),
          "image of (e, 1/2) = " + half.get_str()};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "tower", "--max-level", "3"},
      {"verify", "kernel", "--seed", "5", "--samples", "100"},
      {"scan", "commute", "--seed", "5", "--max-len", "2", "--budget", "500"},
      {"check", "rn-split", "--level", "3"},
      {"lp", "demo", "--seed", "5", "--samples", "200"},
      {"eq", "--lhs", "a1 a2 b1 b2", "--rhs", "b1 b2 a1 a2"},
  };
  Outcome o;
  for (const auto& args : commands) {
    std::ostringstream a, b, err;
    const int ca = cli::run(args, a, err);
    const int cb = cli::run(args, b, err);
    o.ok = o.ok && ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  }
  o.note = std::to_string(commands.size()) + " commands";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tower representation", tower_representation},
      {"infinite order of x01 image", infinite_order},
      {"word length 4^n", word_length_law},
      {"perfectness witness", perfectness},
      {"Heisenberg faithfulness", heisenberg_faithful},
      {"kernel round trip", kernel_round_trip},
      {"commutator rewriting in G", commutator_rewriting},
      {"conjugation expansion", conjugation_expansion},
      {"support under conjugation", conjugation_support},
      {"commuting pair scan", commute_scan},
      {"R_n splitting", rn_splitting},
      {"LP not perfect", lp_non_perfect},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu %s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.note.empty() ? "" : " : ",
                o.note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
