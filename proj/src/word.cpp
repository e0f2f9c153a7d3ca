#include "perfloc/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace perfloc {

namespace {

void check_letter(Letter l, std::size_t rank) {
  if (l.gen() == 0 || l.gen() > rank) {
    throw AlphabetError("generator index " + std::to_string(l.gen()) +
                        " outside alphabet of rank " + std::to_string(rank));
  }
}

void check_same_rank(const Word& u, const Word& v, const char* op) {
  if (u.rank() != v.rank()) {
    throw RankMismatch(std::string(op) + ": rank " + std::to_string(u.rank()) +
                       " vs rank " + std::to_string(v.rank()));
  }
}

// Appends `l` to an already reduced letter stack.
inline void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Word::Word(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw DomainError("alphabet rank must be positive");
}

Word Word::reduce(std::span<const Letter> raw, std::size_t rank) {
  Word w(rank);
  w.letters_.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(l, rank);
    push_reduced(w.letters_, l);
  }
  return w;
}

Word Word::from_codes(std::initializer_list<std::int32_t> codes,
                      std::size_t rank) {
  std::vector<Letter> raw;
  raw.reserve(codes.size());
  for (auto c : codes) raw.push_back(Letter::from_code(c));
  return reduce(raw, rank);
}

Word Word::generator(GeneratorId gen, std::size_t rank) {
  return reduce({Letter::positive(gen)}, rank);
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  Word w(rank_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

Word Word::relabel(std::size_t new_rank, std::int32_t offset) const {
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (Letter l : letters_) {
    auto gen = static_cast<std::int32_t>(l.gen()) + offset;
    if (gen <= 0) throw AlphabetError("relabel moves an index below 1");
    raw.emplace_back(static_cast<GeneratorId>(gen), l.sign());
  }
  return reduce(raw, new_rank);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

Word multiply(const Word& u, const Word& v) {
  check_same_rank(u, v, "multiply");
  // Cancel the common boundary in one pass, then concatenate.
  std::size_t cut = 0;
  const auto& ul = u.letters();
  const auto& vl = v.letters();
  while (cut < ul.size() && cut < vl.size() &&
         ul[ul.size() - 1 - cut].cancels(vl[cut])) {
    ++cut;
  }
  std::vector<Letter> out;
  out.reserve(ul.size() + vl.size() - 2 * cut);
  out.insert(out.end(), ul.begin(), ul.end() - static_cast<std::ptrdiff_t>(cut));
  out.insert(out.end(), vl.begin() + static_cast<std::ptrdiff_t>(cut), vl.end());
  return Word::reduce(out, u.rank());
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word::reduce(out, u.rank());
}

Word power(const Word& u, long k) {
  if (k == 0 || u.empty()) return Word(u.rank());
  const Word base = k > 0 ? u : invert(u);
  const auto n = static_cast<std::size_t>(k > 0 ? k : -k);
  auto [core, conj] = cyclic_reduce(base);
  // base^n = conj^{-1} core^n conj, and core^n is already reduced.
  std::vector<Letter> raw;
  raw.reserve(core.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.insert(raw.end(), core.letters().begin(), core.letters().end());
  }
  Word middle = Word::reduce(raw, u.rank());
  return invert(conj) * middle * conj;
}

Word commutator(const Word& a, const Word& b) {
  check_same_rank(a, b, "commutator");
  std::vector<Letter> raw;
  raw.reserve(2 * (a.size() + b.size()));
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    raw.push_back(it->inverse());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    raw.push_back(it->inverse());
  raw.insert(raw.end(), a.letters().begin(), a.letters().end());
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return Word::reduce(raw, a.rank());
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || !w.front().cancels(w.back());
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  std::size_t peel = 0;
  const std::size_t n = w.size();
  while (2 * peel + 1 < n && w[peel].cancels(w[n - 1 - peel])) ++peel;
  // w = p core p^{-1} with p = w[0..peel); conjugator is p^{-1}.
  Word core = w.slice(peel, n - 2 * peel);
  Word conjugator = invert(w.slice(0, peel));
  return {std::move(core), std::move(conjugator)};
}

namespace {

// Is `b` a cyclic rotation of `a`? Both must have equal length.
bool is_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<std::int32_t> hay;
  hay.reserve(2 * a.size());
  for (int rep = 0; rep < 2; ++rep)
    for (Letter l : a) hay.push_back(l.code());
  std::vector<std::int32_t> needle;
  needle.reserve(b.size());
  for (Letter l : b) needle.push_back(l.code());
  return std::search(hay.begin(), hay.end(),
                     std::boyer_moore_horspool_searcher(needle.begin(),
                                                        needle.end())) !=
         hay.end();
}

}  // namespace

bool is_conjugate(const Word& u, const Word& v) {
  check_same_rank(u, v, "is_conjugate");
  return is_rotation(cyclic_reduce(u).core.letters(),
                     cyclic_reduce(v).core.letters());
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw DomainError("primitive_root of the empty word");
  auto [core, conj] = cyclic_reduce(w);
  const auto& c = core.letters();
  const std::size_t n = c.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) {
      periodic = c[i] == c[i - period];
    }
    if (periodic) {
      Word root = invert(conj) * core.slice(0, period) * conj;
      return {std::move(root), static_cast<long>(n / period)};
    }
  }
  return {w, 1};  // unreachable: period n always matches
}

std::set<GeneratorId> support(const Word& w) {
  std::set<GeneratorId> s;
  for (Letter l : w.letters()) s.insert(l.gen());
  return s;
}

std::optional<long> cyclic_subgroup_member(const Word& u, const Word& v) {
  if (u.empty()) throw DomainError("cyclic_subgroup_member: u is empty");
  check_same_rank(u, v, "cyclic_subgroup_member");
  // u = c^{-1} core c, so v = u^k iff c v c^{-1} = core^k, and core^k has
  // length exactly |k| |core|.
  auto [core, conj] = cyclic_reduce(u);
  Word inner = conj * v * invert(conj);
  if (inner.size() % core.size() != 0) return std::nullopt;
  const long magnitude = static_cast<long>(inner.size() / core.size());
  for (long k : {magnitude, -magnitude}) {
    if (power(u, k) == v) return k;
  }
  return std::nullopt;
}

Word coset_rep(const Word& u, const Word& w) {
  if (u.empty()) throw DomainError("coset_rep: u is empty");
  check_same_rank(u, w, "coset_rep");
  auto [core, conj] = cyclic_reduce(u);
  // |u^k w| >= |k||core| + 2|conj| - |w|; beyond this bound no element of the
  // coset is as short as w itself.
  const long bound = static_cast<long>(2 * w.size() / core.size()) + 2;
  Word best = w;
  const Word u_inv = invert(u);
  Word up = w;
  Word down = w;
  for (long k = 1; k <= bound; ++k) {
    up = u * up;
    down = u_inv * down;
    if (shortlex_less(up, best)) best = up;
    if (shortlex_less(down, best)) best = down;
  }
  return best;
}

std::vector<long> exponent_sum(const Word& w) {
  std::vector<long> sums(w.rank(), 0);
  for (Letter l : w.letters()) sums[l.gen() - 1] += l.sign();
  return sums;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].sign() > 0 ? 'x' : 'X';
    out += std::to_string(w[i].gen());
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t rank) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<Letter> raw;
  bool saw_identity = false;
  std::size_t tokens = 0;
  while (in >> token) {
    ++tokens;
    if (token == "e") {
      saw_identity = true;
      continue;
    }
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'X')) {
      throw ParseError("bad word token '" + token + "'");
    }
    unsigned long index = 0;
    auto [ptr, ec] =
        std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad word token '" + token + "'");
    }
    if (index == 0 || index > rank) {
      throw AlphabetError("token '" + token + "' outside alphabet of rank " +
                          std::to_string(rank));
    }
    raw.emplace_back(static_cast<GeneratorId>(index), token[0] == 'x' ? 1 : -1);
  }
  if (tokens == 0) throw ParseError("empty word text (write 'e')");
  if (saw_identity && tokens > 1) {
    throw ParseError("'e' cannot be mixed with letters");
  }
  return Word::reduce(raw, rank);
}

Word random_word(std::size_t rank, std::size_t length, std::mt19937_64& rng) {
  std::vector<Letter> raw;
  raw.reserve(length);
  std::uniform_int_distribution<std::size_t> first(0, 2 * rank - 1);
  std::uniform_int_distribution<std::size_t> next(0, 2 * rank - 2);
  auto to_letter = [](std::size_t c) {
    return Letter(static_cast<GeneratorId>(c / 2 + 1), c % 2 == 0 ? 1 : -1);
  };
  auto to_index = [](Letter l) {
    return (l.gen() - 1) * 2 + (l.sign() > 0 ? 0 : 1);
  };
  for (std::size_t i = 0; i < length; ++i) {
    if (i == 0) {
      raw.push_back(to_letter(first(rng)));
      continue;
    }
    // Draw from the 2r-1 letters that do not cancel the previous one.
    const std::size_t forbidden = to_index(raw.back().inverse());
    std::size_t c = next(rng);
    if (c >= forbidden) ++c;
    raw.push_back(to_letter(c));
  }
  return Word::reduce(raw, rank);
}

std::vector<Word> enumerate_words(std::size_t rank, std::size_t max_len) {
  std::vector<Letter> alphabet;
  for (GeneratorId g = 1; g <= rank; ++g) {
    alphabet.push_back(Letter::positive(g));
    alphabet.push_back(Letter::negative(g));
  }
  std::vector<Word> out{Word(rank)};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Letter l : alphabet) {
        if (!out[i].empty() && out[i].back().cancels(l)) continue;
        std::vector<Letter> raw = out[i].letters();
        raw.push_back(l);
        out.push_back(Word::reduce(raw, rank));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace perfloc
