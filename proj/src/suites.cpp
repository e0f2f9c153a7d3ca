#include "perfloc/suites.hpp"

#include <algorithm>

namespace perfloc {

nlohmann::json to_json(const CheckResult& c) {
  return {{"name", c.name},
          {"passed", c.passed},
          {"trials", c.trials},
          {"failures", c.failures},
          {"detail", c.detail}};
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

std::size_t uniform(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int random_sign(std::mt19937_64& rng) { return uniform(0, 1, rng) ? 1 : -1; }

}  // namespace

SyllableWord random_syllable_word(std::size_t rank1, std::size_t rank2,
                                  std::size_t max_len, std::mt19937_64& rng) {
  const Word w = random_word(rank1 + rank2, uniform(0, max_len, rng), rng);
  return SyllableWord::from_combined(w, rank1, rank2);
}

SyllableWord random_kernel_word(std::size_t rank1, std::size_t rank2,
                                std::size_t max_len, std::mt19937_64& rng) {
  if (max_len < 4) throw DomainError("random_kernel_word needs max_len >= 4");
  while (true) {
    SyllableWord w(rank1, rank2);
    const std::size_t factors = uniform(1, 3, rng);
    for (std::size_t f = 0; f < factors; ++f) {
      const Word a = random_word(rank1, uniform(1, 3, rng), rng);
      const Word b = random_word(rank2, uniform(1, 3, rng), rng);
      const SyllableWord g = random_syllable_word(rank1, rank2, 3, rng);
      SyllableWord c = commutator_syllables(a, b);
      if (random_sign(rng) < 0) c = sp_invert(c);
      w = w * sp_invert(g) * c * g;
    }
    if (!w.empty() && w.length() <= max_len) return w;
  }
}

SyllableWord random_relator_conjugate(const GContext& ctx, std::size_t g_len,
                                      std::mt19937_64& rng) {
  const SyllableWord g = random_syllable_word(ctx.rank1, ctx.rank2, g_len, rng);
  SyllableWord r = commutator_syllables(ctx.u1, ctx.u2);
  if (random_sign(rng) < 0) r = sp_invert(r);
  return sp_invert(g) * r * g;
}

TowerSuiteResult run_tower_suite(unsigned max_level, long order_powers) {
  TowerSuiteResult out;
  CheckResult lengths{"x01_length_is_4^n"};
  CheckResult perfect{"perfectness_witness"};
  CheckResult relations{"psi_relations_trivial"};
  CheckResult image{"psi_x01_is_elementary"};
  CheckResult order{"psi_x01_infinite_order"};

  for (unsigned n = 0; n <= max_level; ++n) {
    const std::size_t len = x01_word(n).size();
    out.x01_lengths.push_back(len);
    lengths.record(len == (std::size_t{1} << (2 * n)),
                   "level " + std::to_string(n) + ": length " + std::to_string(len));
    auto p = perfectness_witness(n);
    perfect.record(p.all_zero, "level " + std::to_string(n));
    out.perfectness.push_back(std::move(p));
  }
  for (unsigned n = 1; n <= max_level; ++n) {
    const std::string where = "level " + std::to_string(n);
    try {
      PsiReport r = verify_psi(n, order_powers);
      relations.record(r.relations_ok, where);
      image.record(r.sign == 1 || r.sign == -1, where);
      order.record(r.order_witness_ok, where);
      out.psi.push_back(std::move(r));
    } catch (const VerificationFailure& e) {
      relations.record(false, where + ": " + e.what());
      image.record(false, where + ": " + e.what());
      order.record(false, where + ": " + e.what());
    }
  }
  out.checks = {lengths, perfect, relations, image, order};
  return out;
}

std::vector<CheckResult> run_kernel_suite(const GContext& ctx,
                                          const KernelSuiteOptions& options) {
  const auto r1 = ctx.rank1;
  const auto r2 = ctx.rank2;
  std::mt19937_64 rng(options.seed);

  std::vector<FiniteQuotientOracle> oracles;
  for (std::size_t i = 0; i < options.oracle_seeds; ++i) {
    oracles.emplace_back(ctx, options.degree, options.seed + 1000 + i);
  }
  CheckResult oracle_agrees{"oracle_never_refutes_eq"};
  auto consult = [&](const SyllableWord& x, const SyllableWord& y,
                     const std::string& what) {
    for (const auto& o : oracles) {
      oracle_agrees.record(!o.distinguishes(x, y),
                           what + " (oracle seed " + std::to_string(o.seed()) + ")");
    }
  };

  CheckResult round_trip{"kernel_round_trip"};
  for (std::size_t s = 0; s < options.samples; ++s) {
    const SyllableWord w = random_kernel_word(r1, r2, 4 * options.max_len, rng);
    const auto factors = cartesian_basis_express(w);
    bool ok = expand_factors(factors, r1, r2) == w;
    for (const auto& f : factors) ok = ok && !f.v1.empty() && !f.v2.empty();
    round_trip.record(ok, to_string(w));
  }

  CheckResult rewrite{"commutator_rewrite_equal_in_G"};
  CheckResult kinds{"k_symbol_kinds"};
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Word w1 = random_word(r1, uniform(1, options.max_len, rng), rng);
    const Word w2 = random_word(r2, uniform(1, options.max_len, rng), rng);
    const KWord k = rewrite_commutator(ctx, w1, w2);
    const SyllableWord lhs = commutator_syllables(w1, w2);
    const SyllableWord rhs = expand_kword(k, r1, r2);
    const std::string what = "[" + to_string(w1) + ", " + to_string(w2) + "]";
    const bool equal = eq_in_G(ctx, lhs, rhs);
    rewrite.record(equal, what);
    if (equal) consult(lhs, rhs, what);
    for (const auto& l : k.letters()) {
      bool ok = false;
      try {
        ok = classify_symbol(ctx, l.symbol.v1, l.symbol.v2) == l.symbol;
      } catch (const DomainError&) {
      }
      kinds.record(ok, what);
    }
  }

  CheckResult relation{"imposed_relation_holds"};
  const std::span<const FiniteQuotientOracle> all_oracles(oracles);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Word w1 = random_word(r1, uniform(0, options.max_len, rng), rng);
    const Word w2 = random_word(r2, uniform(0, options.max_len, rng), rng);
    const std::string what = "w1 = " + to_string(w1) + ", w2 = " + to_string(w2);
    try {
      const auto report = relation_check(ctx, w1, w2, all_oracles);
      relation.record(report.holds_in_G, what);
      oracle_agrees.record(report.oracle_refutations == 0, what);
    } catch (const VerificationFailure& e) {
      relation.record(false, e.what());
    }
  }

  CheckResult closure{"normal_closure_invariance"};
  for (std::size_t s = 0; s < options.samples; ++s) {
    const SyllableWord w = random_kernel_word(r1, r2, 4 * options.max_len, rng);
    const Word flat = w.to_combined();
    const std::size_t cut = uniform(0, flat.size(), rng);
    const SyllableWord left =
        SyllableWord::from_combined(flat.slice(0, cut), r1, r2);
    const SyllableWord right =
        SyllableWord::from_combined(flat.slice(cut, flat.size() - cut), r1, r2);
    const SyllableWord inserted =
        left * random_relator_conjugate(ctx, 3, rng) * right;
    const std::string what = to_string(w) + " vs " + to_string(inserted);
    closure.record(k_image(ctx, w) == k_image(ctx, inserted), what);
    if (eq_in_G(ctx, w, inserted)) consult(w, inserted, what);
  }

  CheckResult expansion{"conjugation_expansion_identity"};
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Word x1 = random_word(r1, uniform(0, 3, rng), rng);
    const Word x2 = random_word(r2, uniform(0, 3, rng), rng);
    const long n = static_cast<long>(uniform(0, 4, rng));
    std::vector<CommutatorFactor> factors;
    const std::size_t q = uniform(1, 3, rng);
    for (std::size_t j = 0; j < q; ++j) {
      factors.push_back({random_word(r1, uniform(1, 3, rng), rng),
                         random_word(r2, uniform(1, 3, rng), rng),
                         random_sign(rng)});
    }
    expansion.record(conj_expansion_check(x1, x2, factors, n),
                     "x1 = " + to_string(x1) + ", x2 = " + to_string(x2) +
                         ", n = " + std::to_string(n));
  }

  return {round_trip, rewrite, kinds, relation, closure, expansion, oracle_agrees};
}

LPElement random_lp_element(unsigned max_level, std::size_t max_word_len,
                            std::mt19937_64& rng) {
  const auto level = static_cast<unsigned>(uniform(0, max_level, rng));
  const Word w = random_word(level_rank(level), uniform(0, max_word_len, rng), rng);
  const long num = static_cast<long>(uniform(0, 60, rng)) - 30;
  const long den = static_cast<long>(uniform(1, 12, rng));
  return lp_make(level, w, mpq_class(num, den));
}

LpDemoResult run_lp_demo(std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  LpDemoResult out;

  CheckResult half{"half_survives_in_Q_mod_Z"};
  out.half_image = lp_qz_image(lp_make(0, Word(1), mpq_class(1, 2)));
  half.record(out.half_image == mpq_class(1, 2),
              "image of (e, 1/2) is " + out.half_image.get_str());

  CheckResult eta{"eta_image_vanishes"};
  CheckResult commutators{"commutators_vanish_in_Q_mod_Z"};
  CheckResult additive{"qz_image_additive"};
  for (std::size_t s = 0; s < samples; ++s) {
    const unsigned level = static_cast<unsigned>(uniform(0, 3, rng));
    const Word w = random_word(level_rank(level), uniform(0, 8, rng), rng);
    eta.record(lp_qz_image(lp_eta(level, w)) == 0, to_string(w));

    const LPElement a = random_lp_element(3, 6, rng);
    const LPElement b = random_lp_element(3, 6, rng);
    const mpq_class c = lp_qz_image(lp_commutator(a, b));
    commutators.record(c == 0, to_string(a) + ", " + to_string(b) + " -> " +
                                   c.get_str());

    mpq_class sum = lp_qz_image(a) + lp_qz_image(b);
    if (sum >= 1) sum -= 1;
    additive.record(lp_qz_image(lp_multiply(a, b)) == sum,
                    to_string(a) + ", " + to_string(b));
  }
  out.checks = {half, eta, commutators, additive};
  return out;
}

std::vector<CheckResult> run_rn_split(unsigned n) {
  CheckResult split{"split_succeeds"};
  CheckResult relator{"relator_is_commutator_of_halves"};
  CheckResult primitive{"u_i_not_proper_powers"};
  try {
    const GContext ctx = split_Rn_context(n);
    split.record(true, "");
    const std::size_t half = ctx.rank1;
    const Word low = ctx.u1.relabel(2 * half);
    const Word high = ctx.u2.relabel(2 * half, static_cast<std::int32_t>(half));
    relator.record(presentation_R(n).relators.at(0) == commutator(low, high),
                   "level " + std::to_string(n));
    primitive.record(primitive_root(ctx.u1).exponent == 1, "u1");
    primitive.record(primitive_root(ctx.u2).exponent == 1, "u2");
  } catch (const std::exception& e) {
    split.record(false, e.what());
    relator.record(false, "no context");
    primitive.record(false, "no context");
  }
  return {split, relator, primitive};
}

}  // namespace perfloc
