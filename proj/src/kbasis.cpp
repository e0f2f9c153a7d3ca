#include <algorithm>

#include "perfloc/freeprod.hpp"

namespace perfloc {

SyllableWord commutator_syllables(const Word& v1, const Word& v2) {
  const std::size_t r1 = v1.rank();
  const std::size_t r2 = v2.rank();
  const Syllable raw[] = {{1, invert(v1)}, {2, invert(v2)}, {1, v1}, {2, v2}};
  return SyllableWord::reduce(raw, r1, r2);
}

namespace {

void push_factor(std::vector<CommutatorFactor>& out, Word v1, Word v2,
                 int sign) {
  if (v1.empty() || v2.empty()) return;
  if (!out.empty() && out.back().v1 == v1 && out.back().v2 == v2 &&
      out.back().sign == -sign) {
    out.pop_back();
    return;
  }
  out.push_back({std::move(v1), std::move(v2), sign});
}

}  // namespace

std::vector<CommutatorFactor> cartesian_basis_express(const SyllableWord& w) {
  // Read w left to right keeping the prefix image (p1, p2) under h, with the
  // invariant  prefix = E * p1 p2  for E in K'. An F2 syllable only moves p2.
  // An F1 syllable a contributes
  //   p1 p2 a (p1 a p2)^{-1} = [p1^-1, p2^-1] [(p1 a)^-1, p2^-1]^-1.
  Word p1(w.rank1());
  Word p2(w.rank2());
  std::vector<CommutatorFactor> out;
  for (const Syllable& s : w.syllables()) {
    if (s.factor == 2) {
      p2 = p2 * s.word;
      continue;
    }
    Word q1 = p1 * s.word;
    if (!p2.empty()) {
      const Word p2_inv = invert(p2);
      push_factor(out, invert(p1), p2_inv, +1);
      push_factor(out, invert(q1), p2_inv, -1);
    }
    p1 = std::move(q1);
  }
  if (!p1.empty() || !p2.empty()) {
    throw DomainError("cartesian_basis_express: " + to_string(w) +
                      " is not in the kernel of h");
  }
  return out;
}

SyllableWord expand_factors(std::span<const CommutatorFactor> factors,
                            std::size_t rank1, std::size_t rank2) {
  std::vector<Syllable> raw;
  for (const auto& f : factors) {
    SyllableWord c = commutator_syllables(f.v1, f.v2);
    if (f.sign < 0) c = sp_invert(c);
    raw.insert(raw.end(), c.syllables().begin(), c.syllables().end());
  }
  return SyllableWord::reduce(raw, rank1, rank2);
}

KBasisSymbol classify_symbol(const GContext& ctx, const Word& v1,
                             const Word& v2) {
  if (v1.empty() || v2.empty()) {
    throw DomainError("classify_symbol: [" + to_string(v1) + ", " +
                      to_string(v2) + "] has a trivial side");
  }
  if (coset_rep(ctx.u1, v1) == v1) return {v1, v2, SymbolKind::A};
  if (coset_rep(ctx.u2, v2) == v2) return {v1, v2, SymbolKind::B};
  throw DomainError("classify_symbol: neither side of [" + to_string(v1) +
                    ", " + to_string(v2) + "] is a canonical coset representative");
}

void KWord::push(KLetter letter) {
  if (!letters_.empty() && letters_.back().sign == -letter.sign &&
      letters_.back().symbol == letter.symbol) {
    letters_.pop_back();
  } else {
    letters_.push_back(std::move(letter));
  }
}

void KWord::append(const KWord& other, int sign) {
  if (sign > 0) {
    for (const auto& l : other.letters_) push(l);
  } else {
    for (auto it = other.letters_.rbegin(); it != other.letters_.rend(); ++it) {
      push({it->symbol, -it->sign});
    }
  }
}

KWord rewrite_commutator(const GContext& ctx, const Word& w1, const Word& w2) {
  if (w1.empty() || w2.empty()) {
    throw DomainError("rewrite_commutator: both sides must be nontrivial");
  }
  const Word s1 = coset_rep(ctx.u1, w1);
  const Word s2 = coset_rep(ctx.u2, w2);
  KWord out;
  // [w1, s2]: kind A when w1 is itself canonical, otherwise kind B.
  if (!s2.empty()) {
    out.push({{w1, s2, w1 == s1 ? SymbolKind::A : SymbolKind::B}, +1});
  }
  // [s2, s1] = [s1, s2]^{-1}; both sides canonical, filed as kind A.
  if (!s1.empty() && !s2.empty()) {
    out.push({{s1, s2, SymbolKind::A}, -1});
  }
  // [s1, w2]: kind A.
  if (!s1.empty()) {
    out.push({{s1, w2, SymbolKind::A}, +1});
  }
  return out;
}

KWord k_image(const GContext& ctx, const SyllableWord& w) {
  KWord out;
  for (const auto& f : cartesian_basis_express(w)) {
    out.append(rewrite_commutator(ctx, f.v1, f.v2), f.sign);
  }
  return out;
}

SyllableWord expand_kword(const KWord& k, std::size_t rank1, std::size_t rank2) {
  std::vector<CommutatorFactor> factors;
  factors.reserve(k.size());
  for (const auto& l : k.letters()) {
    factors.push_back({l.symbol.v1, l.symbol.v2, l.sign});
  }
  return expand_factors(factors, rank1, rank2);
}

bool eq_in_G(const GContext& ctx, const SyllableWord& x, const SyllableWord& y) {
  const SyllableWord d = x * sp_invert(y);
  if (!in_h_kernel(d)) return false;
  return k_image(ctx, d).empty();
}

RelationCheckReport relation_check(
    const GContext& ctx, const Word& w1, const Word& w2,
    std::span<const FiniteQuotientOracle> oracles) {
  const auto r1 = ctx.rank1;
  const auto r2 = ctx.rank2;
  const auto one = [&](const Word& v) { return SyllableWord::single(1, v, r1, r2); };
  const auto two = [&](const Word& v) { return SyllableWord::single(2, v, r1, r2); };

  const SyllableWord a = one(ctx.u1 * w1);
  const SyllableWord b = two(ctx.u2 * w2);
  const SyllableWord lhs = sp_commutator(a, b);
  const SyllableWord rhs = sp_commutator(a, two(w2)) *
                           sp_commutator(two(w2), one(w1)) *
                           sp_commutator(one(w1), b);

  RelationCheckReport report;
  report.holds_in_G = eq_in_G(ctx, lhs, rhs);
  for (const auto& oracle : oracles) {
    ++report.oracles_consulted;
    if (oracle.distinguishes(lhs, rhs)) ++report.oracle_refutations;
  }
  if (!report.holds_in_G || report.oracle_refutations > 0) {
    throw VerificationFailure(
        "relation_check failed for w1 = " + to_string(w1) +
        ", w2 = " + to_string(w2) + (report.holds_in_G ? " (oracle refuted)"
                                                       : " (not equal in G)"));
  }
  return report;
}

bool conj_expansion_check(const Word& x1, const Word& x2,
                          std::span<const CommutatorFactor> factors, long n) {
  if (n < 0) throw DomainError("conj_expansion_check: n must be >= 0");
  const auto r1 = x1.rank();
  const auto r2 = x2.rank();
  const auto one = [&](const Word& v) { return SyllableWord::single(1, v, r1, r2); };
  const auto two = [&](const Word& v) { return SyllableWord::single(2, v, r1, r2); };

  const SyllableWord big_x = one(power(x1, n));
  const SyllableWord big_y = two(power(x2, n));
  const SyllableWord conj = big_x * big_y;
  const SyllableWord lhs =
      sp_invert(conj) * expand_factors(factors, r1, r2) * conj;

  SyllableWord rhs(r1, r2);
  for (const auto& f : factors) {
    if (f.v1.empty() || f.v2.empty()) {
      throw DomainError("conj_expansion_check: c_j and d_j must be nontrivial");
    }
    const SyllableWord cx = one(f.v1 * power(x1, n));
    const SyllableWord dy = two(f.v2 * power(x2, n));
    SyllableWord block = sp_commutator(big_y, cx) * sp_commutator(cx, dy) *
                         sp_commutator(dy, big_x) * sp_commutator(big_x, big_y);
    rhs = rhs * (f.sign > 0 ? block : sp_invert(block));
  }
  return lhs == rhs;
}

bool conj_support_check(const Word& w, const Word& g) {
  if (!is_cyclically_reduced(w)) {
    throw DomainError("conj_support_check: " + to_string(w) +
                      " is not cyclically reduced");
  }
  const auto inner = support(w);
  const auto outer = support(invert(g) * w * g);
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::string to_string(const KWord& k) {
  if (k.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto& l = k.letters()[i];
    if (i) out += ' ';
    out += '[' + to_string(l.symbol.v1) + ", " + to_string(l.symbol.v2) + ']';
    out += l.symbol.kind == SymbolKind::A ? "_A" : "_B";
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace perfloc
