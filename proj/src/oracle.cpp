#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "perfloc/freeprod.hpp"

namespace perfloc {

namespace {

Permutation identity_perm(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// "apply p, then q"
Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Permutation random_perm(std::size_t degree, std::mt19937_64& rng) {
  Permutation p = identity_perm(degree);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// A uniformly random element of the centralizer of `a`: cycles of equal
// length are permuted among themselves and each is rotated.
Permutation random_centralizer_element(const Permutation& a,
                                       std::mt19937_64& rng) {
  const std::size_t degree = a.size();
  std::vector<bool> seen(degree, false);
  std::map<std::size_t, std::vector<std::vector<std::uint32_t>>> by_length;
  for (std::uint32_t start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t x = start; !seen[x]; x = a[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    by_length[cycle.size()].push_back(std::move(cycle));
  }
  Permutation sigma(degree);
  for (auto& [len, cycles] : by_length) {
    std::vector<std::size_t> target(cycles.size());
    std::iota(target.begin(), target.end(), std::size_t{0});
    std::shuffle(target.begin(), target.end(), rng);
    std::uniform_int_distribution<std::size_t> shift(0, len - 1);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto& src = cycles[i];
      const auto& dst = cycles[target[i]];
      const std::size_t r = shift(rng);
      for (std::size_t t = 0; t < len; ++t) sigma[src[t]] = dst[(t + r) % len];
    }
  }
  return sigma;
}

Permutation evaluate_on(const std::vector<Permutation>& images, const Word& w,
                        std::size_t degree) {
  Permutation acc = identity_perm(degree);
  for (Letter l : w.letters()) {
    const Permutation& g = images[l.gen() - 1];
    acc = compose(acc, l.sign() > 0 ? g : inverse_perm(g));
  }
  return acc;
}

}  // namespace

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

FiniteQuotientOracle::FiniteQuotientOracle(const GContext& ctx,
                                           std::size_t degree,
                                           std::uint64_t seed)
    : degree_(degree), seed_(seed) {
  if (degree < 2) throw DomainError("finite quotient oracle needs degree >= 2");
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * degree));
  for (std::size_t g = 0; g < ctx.rank1; ++g) {
    images1_.push_back(random_perm(degree, rng));
  }
  const Permutation a = evaluate_on(images1_, ctx.u1, degree);
  for (std::size_t g = 0; g < ctx.rank2; ++g) {
    images2_.push_back(random_centralizer_element(a, rng));
  }
}

const Permutation& FiniteQuotientOracle::generator_image(int factor,
                                                         GeneratorId gen) const {
  const auto& images = factor == 1 ? images1_ : images2_;
  if (gen == 0 || gen > images.size()) {
    throw AlphabetError("oracle: no generator " + std::to_string(gen) +
                        " in factor " + std::to_string(factor));
  }
  return images[gen - 1];
}

Permutation FiniteQuotientOracle::evaluate_factor(int factor,
                                                  const Word& w) const {
  const auto& images = factor == 1 ? images1_ : images2_;
  if (w.rank() != images.size()) {
    throw RankMismatch("oracle: word rank does not match factor " +
                       std::to_string(factor));
  }
  return evaluate_on(images, w, degree_);
}

Permutation FiniteQuotientOracle::evaluate(const SyllableWord& w) const {
  if (w.rank1() != images1_.size() || w.rank2() != images2_.size()) {
    throw RankMismatch("oracle: syllable word over a different free product");
  }
  Permutation acc = identity_perm(degree_);
  for (const auto& s : w.syllables()) {
    acc = compose(acc, evaluate_factor(s.factor, s.word));
  }
  return acc;
}

bool FiniteQuotientOracle::distinguishes(const SyllableWord& x,
                                         const SyllableWord& y) const {
  return evaluate(x) != evaluate(y);
}

}  // namespace perfloc
