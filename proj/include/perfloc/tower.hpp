#pragma once

// The directed system of free groups F(2^n) with structure maps
//
//     phi_n : x_i  ->  [x_{2i-1}, x_{2i}],
//
// the image x01(n) of the bottom generator at each level, the finite
// presentations P_n and R_n, the unitriangular representation psi_n of P_n,
// the Heisenberg model of P_1, and the group LP = (P + Q) / <(x01, -1)>.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "perfloc/bigmatrix.hpp"
#include "perfloc/freeprod.hpp"
#include "perfloc/word.hpp"

namespace perfloc {

/// Number of generators at level n.
std::size_t level_rank(unsigned n);

/// phi_n applied letter by letter. Throws RankMismatch unless w has rank 2^n.
Word phi_apply(unsigned n, const Word& w);

/// phi applied repeatedly, lifting a level-`from` word to level `to`.
Word lift(unsigned from, unsigned to, const Word& w);

/// The image of x_1 under phi_{n-1} o ... o phi_0; length 4^n.
Word x01_word(unsigned n);

struct Presentation {
  std::size_t rank = 1;
  std::vector<Word> relators;
};

/// P_n: relators [x01(n), x_i] for i = 1..2^n.
Presentation presentation_P(unsigned n);
/// R_n: the single relator x01(n). Throws DomainError for n = 0.
Presentation presentation_R(unsigned n);

nlohmann::json to_json(const Presentation& p);

/// psi_n: x_i -> e^1_{i,i+1} in dimension 2^n + 1. Throws DomainError for
/// n = 0.
MatrixAssignment psi_assignment(unsigned n);

struct PsiReport {
  unsigned n = 0;
  bool relations_ok = false;
  IntMatrix x01_image{1};
  int sign = 0;
  bool order_witness_ok = false;
  long order_checked_to = 0;
};

/// Evaluates every relator of P_n under psi_n, checks psi_n(x01) is
/// e^{+-1}_{1,2^n+1}, and that its powers 1..max_power are e^{+-k} and
/// pairwise distinct. Throws VerificationFailure naming the first failure.
PsiReport verify_psi(unsigned n, long max_power = 100);

nlohmann::json to_json(const PsiReport& r);

struct PerfectnessReport {
  unsigned n = 0;
  bool all_zero = false;
  std::vector<std::vector<long>> exponent_sums;  // one per generator
};

/// Exponent sums of phi_n(x_i) for every generator x_i of level n.
PerfectnessReport perfectness_witness(unsigned n);

/// Normal form x1^i x2^j c^k, c = [x1, x2], in the free nilpotent group of
/// class 2 and rank 2.
struct HeisenbergTriple {
  long i = 0;
  long j = 0;
  long k = 0;

  friend bool operator==(const HeisenbergTriple&,
                         const HeisenbergTriple&) = default;
  friend auto operator<=>(const HeisenbergTriple&,
                          const HeisenbergTriple&) = default;
};

/// Collects a rank-2 word into its normal form. Throws RankMismatch for
/// other ranks.
HeisenbergTriple heisenberg_nf(const Word& w);

/// R_n = F(first half) * F(second half) / <<[u1, u2]>> with u1, u2 the
/// level n-1 images of x1 placed in each half. Requires n >= 2.
GContext split_Rn_context(unsigned n);

/// An element (w, r) of LP with w a word at `level`.
struct LPElement {
  unsigned level = 0;
  Word word;
  mpq_class rational;

  friend bool operator==(const LPElement& a, const LPElement& b) {
    return a.level == b.level && a.word == b.word && a.rational == b.rational;
  }
};

/// eta: P -> LP on a level-n word.
LPElement lp_eta(unsigned level, const Word& w);
LPElement lp_make(unsigned level, const Word& w, const mpq_class& r);

/// Moves the integer part m of the rational into the word (w -> w x01^m) so
/// the rational lies in [0, 1).
LPElement lp_normalize(const LPElement& e);
LPElement lp_multiply(const LPElement& a, const LPElement& b);
LPElement lp_invert(const LPElement& a);
LPElement lp_commutator(const LPElement& a, const LPElement& b);

/// The image in LP / P = Q / Z, as a rational in [0, 1).
mpq_class lp_qz_image(const LPElement& e);

std::string to_string(const LPElement& e);

}  // namespace perfloc
