#pragma once

// Seeded verification suites shared by the command-line tool and the
// acceptance tests. Each suite returns one CheckResult per property.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "perfloc/freeprod.hpp"
#include "perfloc/tower.hpp"

namespace perfloc {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or a summary

  void record(bool ok, const std::string& what) {
    ++trials;
    if (!ok) {
      if (failures == 0) detail = what;
      ++failures;
      passed = false;
    }
  }
};

nlohmann::json to_json(const CheckResult& c);
bool all_passed(const std::vector<CheckResult>& checks);

/// A nonempty product of 1-3 conjugated commutators g^-1 [a, b]^{+-1} g of at
/// most max_len letters (max_len >= 4).
SyllableWord random_kernel_word(std::size_t rank1, std::size_t rank2,
                                std::size_t max_len, std::mt19937_64& rng);

/// Random element of F1 * F2 with at most max_len letters.
SyllableWord random_syllable_word(std::size_t rank1, std::size_t rank2,
                                  std::size_t max_len, std::mt19937_64& rng);

/// Random element of the normal closure of [u1, u2]: g^-1 [u1,u2]^{+-1} g.
SyllableWord random_relator_conjugate(const GContext& ctx, std::size_t g_len,
                                      std::mt19937_64& rng);

struct TowerSuiteResult {
  std::vector<PsiReport> psi;                   // levels 1..max_level
  std::vector<PerfectnessReport> perfectness;   // levels 0..max_level
  std::vector<std::size_t> x01_lengths;         // levels 0..max_level
  std::vector<CheckResult> checks;
};

TowerSuiteResult run_tower_suite(unsigned max_level, long order_powers = 100);

struct KernelSuiteOptions {
  std::size_t samples = 500;
  std::size_t max_len = 6;       // per-side word length
  std::uint64_t seed = 0;
  std::size_t degree = 8;        // oracle degree
  std::size_t oracle_seeds = 20;
};

/// Kernel round trip, the commutator rewriting and its defining relation,
/// the conjugation expansion identity, K symbol kinds, and oracle agreement.
std::vector<CheckResult> run_kernel_suite(const GContext& ctx,
                                          const KernelSuiteOptions& options);

struct LpDemoResult {
  mpq_class half_image;
  std::vector<CheckResult> checks;
};

LPElement random_lp_element(unsigned max_level, std::size_t max_word_len,
                            std::mt19937_64& rng);

/// The LP / P = Q / Z witness: commutators die, (e, 1/2) does not.
LpDemoResult run_lp_demo(std::uint64_t seed, std::size_t samples);

/// split_Rn_context checks at one level.
std::vector<CheckResult> run_rn_split(unsigned n);

}  // namespace perfloc
