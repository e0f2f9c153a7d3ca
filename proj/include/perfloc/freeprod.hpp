#pragma once

// The free product F1 * F2 of two free groups and its quotient
//
//     G = F1 * F2 / << [u1, u2] >>.
//
// Elements of F1 * F2 are syllable words. The kernel K' of F1 * F2 -> F1 + F2
// is free on the commutators [v1, v2] (v1, v2 nontrivial); the kernel K of
// G -> F1 + F2 is free on those [v1, v2] in which v1 is a canonical
// representative of a coset <u1> v1 other than <u1>, or v2 is such a
// representative for <u2>. Equality in G reduces to equality of images in
// F1 + F2 plus free reduction of the image in K.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "perfloc/word.hpp"

namespace perfloc {

/// The data (F1, F2, u1, u2) defining G.
struct GContext {
  std::size_t rank1 = 1;
  std::size_t rank2 = 1;
  Word u1;
  Word u2;

  /// Validates that u1, u2 are nonempty and not proper powers; throws
  /// DomainError otherwise. Ranks are taken from the words.
  static GContext make(Word u1, Word u2);

  friend bool operator==(const GContext&, const GContext&) = default;
};

struct Syllable {
  int factor;  // 1 or 2
  Word word;   // nonempty, over the rank of that factor

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// An element of F1 * F2 in normal form: nonempty syllables alternating
/// between the two factors.
class SyllableWord {
 public:
  SyllableWord(std::size_t rank1, std::size_t rank2);

  /// Merges adjacent same-factor syllables and drops empty ones. Throws
  /// RankMismatch when a syllable is over the wrong rank.
  static SyllableWord reduce(std::span<const Syllable> raw, std::size_t rank1,
                             std::size_t rank2);
  static SyllableWord single(int factor, const Word& w, std::size_t rank1,
                             std::size_t rank2);
  /// A word over rank1 + rank2 letters; x_{rank1+k} is the k-th letter of F2.
  static SyllableWord from_combined(const Word& w, std::size_t rank1,
                                    std::size_t rank2);

  std::size_t rank1() const { return rank1_; }
  std::size_t rank2() const { return rank2_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Total number of letters.
  std::size_t length() const;

  Word to_combined() const;

  friend bool operator==(const SyllableWord&, const SyllableWord&) = default;

 private:
  std::size_t rank1_;
  std::size_t rank2_;
  std::vector<Syllable> syllables_;
};

SyllableWord sp_multiply(const SyllableWord& x, const SyllableWord& y);
SyllableWord sp_invert(const SyllableWord& x);
SyllableWord sp_commutator(const SyllableWord& x, const SyllableWord& y);
inline SyllableWord operator*(const SyllableWord& x, const SyllableWord& y) {
  return sp_multiply(x, y);
}

/// Image in F1 + F2: (product of F1 syllables, product of F2 syllables).
std::pair<Word, Word> h_map(const SyllableWord& w);
bool in_h_kernel(const SyllableWord& w);

/// One factor [v1, v2]^sign of a product of commutators, v1 in F1, v2 in F2.
struct CommutatorFactor {
  Word v1;
  Word v2;
  int sign = 1;

  friend bool operator==(const CommutatorFactor&,
                         const CommutatorFactor&) = default;
};

/// [v1, v2] as a syllable word.
SyllableWord commutator_syllables(const Word& v1, const Word& v2);

/// Writes w (which must lie in the kernel of h) as a freely reduced product
/// of basis commutators [v1, v2]^{+-1} of K'. Throws DomainError otherwise.
std::vector<CommutatorFactor> cartesian_basis_express(const SyllableWord& w);

/// Multiplies out a product of commutators in F1 * F2.
SyllableWord expand_factors(std::span<const CommutatorFactor> factors,
                            std::size_t rank1, std::size_t rank2);

enum class SymbolKind { A, B };

/// A free generator [v1, v2] of K. Kind A: v1 is a canonical representative
/// of a nontrivial coset of <u1>. Kind B: v2 is one for <u2> (and v1 is not).
struct KBasisSymbol {
  Word v1;
  Word v2;
  SymbolKind kind = SymbolKind::A;

  friend bool operator==(const KBasisSymbol&, const KBasisSymbol&) = default;
};

/// Classifies [v1, v2] as a K generator. Throws DomainError when it is not
/// one (a side is trivial, or neither side is a canonical representative).
KBasisSymbol classify_symbol(const GContext& ctx, const Word& v1,
                             const Word& v2);

struct KLetter {
  KBasisSymbol symbol;
  int sign = 1;

  friend bool operator==(const KLetter&, const KLetter&) = default;
};

/// A freely reduced word over K generators.
class KWord {
 public:
  KWord() = default;

  /// Appends with free cancellation against the last letter.
  void push(KLetter letter);
  /// Appends `other`, or its inverse when sign < 0.
  void append(const KWord& other, int sign = 1);

  const std::vector<KLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const KWord&, const KWord&) = default;

 private:
  std::vector<KLetter> letters_;
};

/// The rewriting [w1, w2] = [w1, s2][s2, s1][s1, w2] with s_i the canonical
/// representative of <u_i> w_i. Factors with s_i trivial are dropped.
/// Throws DomainError when w1 or w2 is trivial.
KWord rewrite_commutator(const GContext& ctx, const Word& w1, const Word& w2);

/// Image in K of an element of the kernel of h. Empty iff w = 1 in G.
KWord k_image(const GContext& ctx, const SyllableWord& w);

/// Multiplies out a K word in F1 * F2.
SyllableWord expand_kword(const KWord& k, std::size_t rank1, std::size_t rank2);

/// Decides x = y in G.
bool eq_in_G(const GContext& ctx, const SyllableWord& x, const SyllableWord& y);

using Permutation = std::vector<std::uint32_t>;

/// A homomorphism G -> Sym(degree): F1 generators go to random permutations,
/// F2 generators to random elements of the centralizer of the image of u1,
/// so [u1, u2] is killed. Deterministic in (ctx, degree, seed).
class FiniteQuotientOracle {
 public:
  FiniteQuotientOracle(const GContext& ctx, std::size_t degree,
                       std::uint64_t seed);

  std::size_t degree() const { return degree_; }
  std::uint64_t seed() const { return seed_; }

  const Permutation& generator_image(int factor, GeneratorId gen) const;
  /// Right action: the image of xy is "apply x, then y".
  Permutation evaluate(const SyllableWord& w) const;
  Permutation evaluate_factor(int factor, const Word& w) const;
  bool distinguishes(const SyllableWord& x, const SyllableWord& y) const;

 private:
  std::size_t degree_;
  std::uint64_t seed_;
  std::vector<Permutation> images1_;
  std::vector<Permutation> images2_;
};

bool is_identity(const Permutation& p);

struct RelationCheckReport {
  bool holds_in_G = false;
  std::size_t oracles_consulted = 0;
  std::size_t oracle_refutations = 0;
};

/// Checks [u1 w1, u2 w2] = [u1 w1, w2][w2, w1][w1, u2 w2] in G, and that no
/// oracle separates the two sides. Throws VerificationFailure if either part
/// fails.
RelationCheckReport relation_check(
    const GContext& ctx, const Word& w1, const Word& w2,
    std::span<const FiniteQuotientOracle> oracles = {});

/// Checks, by free reduction in F1 * F2,
///   x2^-n x1^-n P x1^n x2^n
///     = prod_j ([x2^n, c_j x1^n][c_j x1^n, d_j x2^n][d_j x2^n, x1^n]
///               [x1^n, x2^n])^{delta_j}
/// where P = prod_j [c_j, d_j]^{delta_j}.
bool conj_expansion_check(const Word& x1, const Word& x2,
                          std::span<const CommutatorFactor> factors, long n);

/// Checks support(w) is contained in support(g^-1 w g). Throws DomainError
/// unless w is cyclically reduced.
bool conj_support_check(const Word& w, const Word& g);

struct ScanOptions {
  std::size_t max_len = 3;          // exhaustive over both words
  std::size_t budget = 0;           // random pairs after the exhaustive part
  std::uint64_t seed = 0;
  std::size_t random_max_len = 6;   // letters per random word
  unsigned workers = 1;
};

struct ScanCounterexample {
  SyllableWord x;
  SyllableWord y;
};

struct ScanReport {
  GContext ctx;
  ScanOptions options;
  std::size_t pairs_tested = 0;
  std::size_t commuting_pairs_found = 0;
  std::size_t nontrivial_free_commutators = 0;  // commuting, [x,y] != 1 in F1*F2
  std::vector<ScanCounterexample> counterexamples;
};

/// For every tested pair (x, y) with x and y both commuting with [x, y] in G,
/// records a counterexample unless [x, y] = 1 in G. The report does not depend
/// on the worker count.
ScanReport commute_lemma_scan(const GContext& ctx, const ScanOptions& options);

/// Syllable text: tokens a<i>/A<i> (F1 letter / inverse), b<i>/B<i> (F2),
/// x<i>/X<i> with F2 letters at offset indices rank1+k, optional `|`
/// separators, or `e`.
SyllableWord parse_syllable_word(std::string_view text, std::size_t rank1,
                                 std::size_t rank2);
std::string to_string(const SyllableWord& w);
std::string to_string(const KWord& k);

nlohmann::json to_json(const GContext& ctx);
nlohmann::json to_json(const ScanReport& report);

}  // namespace perfloc
