#include <charconv>
#include <sstream>

#include "perfloc/freeprod.hpp"

namespace perfloc {

GContext GContext::make(Word u1, Word u2) {
  if (u1.empty() || u2.empty()) {
    throw DomainError("GContext: u1 and u2 must be nonempty");
  }
  if (is_proper_power(u1)) {
    throw DomainError("GContext: u1 = " + to_string(u1) + " is a proper power");
  }
  if (is_proper_power(u2)) {
    throw DomainError("GContext: u2 = " + to_string(u2) + " is a proper power");
  }
  GContext ctx;
  ctx.rank1 = u1.rank();
  ctx.rank2 = u2.rank();
  ctx.u1 = std::move(u1);
  ctx.u2 = std::move(u2);
  return ctx;
}

SyllableWord::SyllableWord(std::size_t rank1, std::size_t rank2)
    : rank1_(rank1), rank2_(rank2) {}

SyllableWord SyllableWord::reduce(std::span<const Syllable> raw,
                                  std::size_t rank1, std::size_t rank2) {
  SyllableWord out(rank1, rank2);
  auto& st = out.syllables_;
  for (const Syllable& s : raw) {
    if (s.factor != 1 && s.factor != 2) {
      throw DomainError("syllable factor must be 1 or 2");
    }
    if (s.word.rank() != (s.factor == 1 ? rank1 : rank2)) {
      throw RankMismatch("syllable over rank " + std::to_string(s.word.rank()) +
                         " in factor " + std::to_string(s.factor));
    }
    if (s.word.empty()) continue;
    // The stack alternates, so a merge that empties the top exposes a
    // syllable of the other factor and nothing further cascades here.
    if (!st.empty() && st.back().factor == s.factor) {
      Word merged = st.back().word * s.word;
      st.pop_back();
      if (!merged.empty()) st.push_back({s.factor, std::move(merged)});
    } else {
      st.push_back(s);
    }
  }
  return out;
}

SyllableWord SyllableWord::single(int factor, const Word& w, std::size_t rank1,
                                  std::size_t rank2) {
  Syllable s{factor, w};
  return reduce(std::span<const Syllable>(&s, 1), rank1, rank2);
}

SyllableWord SyllableWord::from_combined(const Word& w, std::size_t rank1,
                                         std::size_t rank2) {
  if (w.rank() != rank1 + rank2) {
    throw RankMismatch("from_combined: word rank != rank1 + rank2");
  }
  std::vector<Syllable> raw;
  std::vector<Letter> run;
  int run_factor = 0;
  auto flush = [&] {
    if (run.empty()) return;
    raw.push_back({run_factor, Word::reduce(run, run_factor == 1 ? rank1 : rank2)});
    run.clear();
  };
  for (Letter l : w.letters()) {
    const int factor = l.gen() <= rank1 ? 1 : 2;
    if (factor != run_factor) {
      flush();
      run_factor = factor;
    }
    const GeneratorId gen =
        factor == 1 ? l.gen() : l.gen() - static_cast<GeneratorId>(rank1);
    run.emplace_back(gen, l.sign());
  }
  flush();
  return reduce(raw, rank1, rank2);
}

std::size_t SyllableWord::length() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += s.word.size();
  return n;
}

Word SyllableWord::to_combined() const {
  std::vector<Letter> raw;
  for (const auto& s : syllables_) {
    const auto offset = s.factor == 1 ? 0 : static_cast<GeneratorId>(rank1_);
    for (Letter l : s.word.letters()) raw.emplace_back(l.gen() + offset, l.sign());
  }
  return Word::reduce(raw, rank1_ + rank2_);
}

namespace {

void check_same_ranks(const SyllableWord& x, const SyllableWord& y) {
  if (x.rank1() != y.rank1() || x.rank2() != y.rank2()) {
    throw RankMismatch("syllable words over different free products");
  }
}

}  // namespace

SyllableWord sp_multiply(const SyllableWord& x, const SyllableWord& y) {
  check_same_ranks(x, y);
  std::vector<Syllable> raw = x.syllables();
  raw.insert(raw.end(), y.syllables().begin(), y.syllables().end());
  return SyllableWord::reduce(raw, x.rank1(), x.rank2());
}

SyllableWord sp_invert(const SyllableWord& x) {
  std::vector<Syllable> raw;
  raw.reserve(x.syllables().size());
  for (auto it = x.syllables().rbegin(); it != x.syllables().rend(); ++it) {
    raw.push_back({it->factor, invert(it->word)});
  }
  return SyllableWord::reduce(raw, x.rank1(), x.rank2());
}

SyllableWord sp_commutator(const SyllableWord& x, const SyllableWord& y) {
  return sp_invert(x) * sp_invert(y) * x * y;
}

std::pair<Word, Word> h_map(const SyllableWord& w) {
  Word a(w.rank1());
  Word b(w.rank2());
  for (const auto& s : w.syllables()) {
    if (s.factor == 1) {
      a = a * s.word;
    } else {
      b = b * s.word;
    }
  }
  return {std::move(a), std::move(b)};
}

bool in_h_kernel(const SyllableWord& w) {
  auto [a, b] = h_map(w);
  return a.empty() && b.empty();
}

SyllableWord parse_syllable_word(std::string_view text, std::size_t rank1,
                                 std::size_t rank2) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<Syllable> raw;
  std::size_t tokens = 0;
  bool saw_identity = false;
  while (in >> token) {
    if (token == "|") continue;
    ++tokens;
    if (token == "e") {
      saw_identity = true;
      continue;
    }
    const char head = token[0];
    if (token.size() < 2 || std::string_view("aAbBxX").find(head) ==
                                std::string_view::npos) {
      throw ParseError("bad syllable token '" + token + "'");
    }
    unsigned long index = 0;
    auto [ptr, ec] =
        std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad syllable token '" + token + "'");
    }
    const int sign = (head == 'a' || head == 'b' || head == 'x') ? 1 : -1;
    int factor = (head == 'a' || head == 'A') ? 1 : 2;
    if (head == 'x' || head == 'X') {
      if (index > rank1) {
        factor = 2;
        index -= rank1;
      } else {
        factor = 1;
      }
    }
    const std::size_t rank = factor == 1 ? rank1 : rank2;
    if (index == 0 || index > rank) {
      throw AlphabetError("token '" + token + "' outside factor " +
                          std::to_string(factor) + " of rank " +
                          std::to_string(rank));
    }
    raw.push_back(
        {factor, Word::reduce({Letter(static_cast<GeneratorId>(index), sign)},
                              rank)});
  }
  if (tokens == 0) throw ParseError("empty syllable text (write 'e')");
  if (saw_identity && tokens > 1) {
    throw ParseError("'e' cannot be mixed with letters");
  }
  return SyllableWord::reduce(raw, rank1, rank2);
}

std::string to_string(const SyllableWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.syllables().size(); ++i) {
    const auto& s = w.syllables()[i];
    if (i) out += " | ";
    for (std::size_t k = 0; k < s.word.size(); ++k) {
      if (k) out += ' ';
      const Letter l = s.word[k];
      out += s.factor == 1 ? (l.sign() > 0 ? 'a' : 'A') : (l.sign() > 0 ? 'b' : 'B');
      out += std::to_string(l.gen());
    }
  }
  return out;
}

}  // namespace perfloc
