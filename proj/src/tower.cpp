#include "perfloc/tower.hpp"

#include <set>

namespace perfloc {

std::size_t level_rank(unsigned n) {
  if (n > 30) throw DomainError("tower level too large");
  return std::size_t{1} << n;
}

Word phi_apply(unsigned n, const Word& w) {
  if (w.rank() != level_rank(n)) {
    throw RankMismatch("phi_apply: word of rank " + std::to_string(w.rank()) +
                       " at level " + std::to_string(n));
  }
  std::vector<Letter> raw;
  raw.reserve(4 * w.size());
  for (Letter l : w.letters()) {
    const GeneratorId odd = 2 * l.gen() - 1;
    const GeneratorId even = 2 * l.gen();
    if (l.sign() > 0) {
      // [x_odd, x_even]
      raw.insert(raw.end(), {Letter::negative(odd), Letter::negative(even),
                             Letter::positive(odd), Letter::positive(even)});
    } else {
      // [x_odd, x_even]^{-1} = [x_even, x_odd]
      raw.insert(raw.end(), {Letter::negative(even), Letter::negative(odd),
                             Letter::positive(even), Letter::positive(odd)});
    }
  }
  return Word::reduce(raw, level_rank(n + 1));
}

Word lift(unsigned from, unsigned to, const Word& w) {
  if (to < from) throw DomainError("lift: target level below source level");
  Word out = w;
  for (unsigned n = from; n < to; ++n) out = phi_apply(n, out);
  return out;
}

Word x01_word(unsigned n) { return lift(0, n, Word::generator(1, 1)); }

Presentation presentation_P(unsigned n) {
  Presentation p;
  p.rank = level_rank(n);
  const Word x01 = x01_word(n);
  for (GeneratorId i = 1; i <= p.rank; ++i) {
    p.relators.push_back(commutator(x01, Word::generator(i, p.rank)));
  }
  return p;
}

Presentation presentation_R(unsigned n) {
  if (n == 0) throw DomainError("presentation_R: R_0 is the trivial group");
  return {level_rank(n), {x01_word(n)}};
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json relators = nlohmann::json::array();
  for (const auto& r : p.relators) relators.push_back(to_string(r));
  return {{"rank", p.rank}, {"relators", std::move(relators)}};
}

MatrixAssignment psi_assignment(unsigned n) {
  if (n == 0) throw DomainError("psi_n is defined for n > 0 only");
  const std::size_t rank = level_rank(n);
  MatrixAssignment psi;
  for (GeneratorId i = 1; i <= rank; ++i) {
    psi.emplace(i, IntMatrix::elementary(1, i, i + 1, rank + 1));
  }
  return psi;
}

PsiReport verify_psi(unsigned n, long max_power) {
  const auto psi = psi_assignment(n);
  const std::size_t dim = level_rank(n) + 1;
  PsiReport report;
  report.n = n;

  const Presentation pres = presentation_P(n);
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    if (!evaluate_word(psi, pres.relators[i]).is_identity()) {
      throw VerificationFailure("psi_" + std::to_string(n) + ": relator [x01, x" +
                                std::to_string(i + 1) +
                                "] does not map to the identity");
    }
  }
  report.relations_ok = true;

  report.x01_image = evaluate_word(psi, x01_word(n));
  for (int sign : {+1, -1}) {
    if (report.x01_image == IntMatrix::elementary(sign, 1, dim, dim)) {
      report.sign = sign;
    }
  }
  if (report.sign == 0) {
    throw VerificationFailure("psi_" + std::to_string(n) +
                              "(x01) is not e^{+-1}_{1," + std::to_string(dim) +
                              "}: " + to_string(report.x01_image));
  }

  std::set<IntMatrix> seen;
  IntMatrix acc(dim);
  for (long k = 1; k <= max_power; ++k) {
    acc = acc * report.x01_image;
    if (acc != IntMatrix::elementary(report.sign * k, 1, dim, dim)) {
      throw VerificationFailure("psi_" + std::to_string(n) + "(x01)^" +
                                std::to_string(k) + " is not e^{" +
                                std::to_string(report.sign * k) + "}");
    }
    if (!seen.insert(acc).second) {
      throw VerificationFailure("psi_" + std::to_string(n) + "(x01)^" +
                                std::to_string(k) + " repeats an earlier power");
    }
  }
  report.order_witness_ok = true;
  report.order_checked_to = max_power;
  return report;
}

nlohmann::json to_json(const PsiReport& r) {
  return {{"n", r.n},
          {"rank", level_rank(r.n)},
          {"x01_length", x01_word(r.n).size()},
          {"relations_ok", r.relations_ok},
          {"sign", r.sign},
          {"order_checked_to", r.order_checked_to}};
}

PerfectnessReport perfectness_witness(unsigned n) {
  PerfectnessReport report;
  report.n = n;
  report.all_zero = true;
  const std::size_t rank = level_rank(n);
  for (GeneratorId i = 1; i <= rank; ++i) {
    auto sums = exponent_sum(phi_apply(n, Word::generator(i, rank)));
    for (long s : sums) report.all_zero = report.all_zero && s == 0;
    report.exponent_sums.push_back(std::move(sums));
  }
  return report;
}

HeisenbergTriple heisenberg_nf(const Word& w) {
  if (w.rank() != 2) throw RankMismatch("heisenberg_nf needs a rank-2 word");
  // Right-multiplying x1^i x2^j c^k by x1^e moves x1^e left past x2^j,
  // and x2 x1 = x1 x2 c^{-1}, so k drops by j e.
  HeisenbergTriple t;
  for (Letter l : w.letters()) {
    if (l.gen() == 1) {
      t.i += l.sign();
      t.k -= t.j * l.sign();
    } else {
      t.j += l.sign();
    }
  }
  return t;
}

GContext split_Rn_context(unsigned n) {
  if (n < 2) throw DomainError("split_Rn_context needs n >= 2");
  const std::size_t half = level_rank(n - 1);
  const Word u = x01_word(n - 1);
  // Consistency with R_n's relator: [u placed low, u placed high] = x01(n).
  const Word low = u.relabel(2 * half);
  const Word high = u.relabel(2 * half, static_cast<std::int32_t>(half));
  if (commutator(low, high) != x01_word(n)) {
    throw VerificationFailure("split_Rn_context: relator of R_" +
                              std::to_string(n) + " is not [u1, u2]");
  }
  try {
    return GContext::make(u, u);
  } catch (const DomainError& e) {
    throw VerificationFailure(std::string("split_Rn_context: ") + e.what());
  }
}

LPElement lp_make(unsigned level, const Word& w, const mpq_class& r) {
  if (w.rank() != level_rank(level)) {
    throw RankMismatch("LP element: word rank does not match level");
  }
  LPElement e{level, w, r};
  e.rational.canonicalize();
  return e;
}

LPElement lp_eta(unsigned level, const Word& w) {
  return lp_make(level, w, mpq_class(0));
}

LPElement lp_normalize(const LPElement& e) {
  mpq_class r = e.rational;
  r.canonicalize();
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  LPElement out = e;
  out.rational = r - m;
  out.rational.canonicalize();
  if (m != 0) {
    // (w, r) = (w, f)(1, m) and (1, m) ~ (x01^m, 0).
    out.word = e.word * power(x01_word(e.level), m.get_si());
  }
  return out;
}

namespace {

LPElement at_level(const LPElement& e, unsigned level) {
  return {level, lift(e.level, level, e.word), e.rational};
}

}  // namespace

LPElement lp_multiply(const LPElement& a, const LPElement& b) {
  const unsigned level = std::max(a.level, b.level);
  const LPElement la = at_level(a, level);
  const LPElement lb = at_level(b, level);
  return lp_normalize({level, la.word * lb.word, la.rational + lb.rational});
}

LPElement lp_invert(const LPElement& a) {
  return lp_normalize({a.level, invert(a.word), -a.rational});
}

LPElement lp_commutator(const LPElement& a, const LPElement& b) {
  return lp_multiply(lp_multiply(lp_invert(a), lp_invert(b)),
                     lp_multiply(a, b));
}

mpq_class lp_qz_image(const LPElement& e) { return lp_normalize(e).rational; }

std::string to_string(const LPElement& e) {
  return "(level " + std::to_string(e.level) + ": " + to_string(e.word) + ", " +
         e.rational.get_str() + ")";
}

}  // namespace perfloc
