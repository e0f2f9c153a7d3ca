#pragma once

// Exact word calculus in finitely generated free groups.
//
// Generators of a rank-r alphabet are numbered 1..r. A Word is always freely
// reduced; every operation returns a fresh value.

#include <cstddef>
#include <cstdint>
#include <compare>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perfloc/errors.hpp"

namespace perfloc {

using GeneratorId = std::uint32_t;

/// A signed generator: x_i (sign +1) or x_i^{-1} (sign -1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(GeneratorId gen, int sign)
      : code_(sign > 0 ? static_cast<std::int32_t>(gen)
                       : -static_cast<std::int32_t>(gen)) {}

  static constexpr Letter positive(GeneratorId gen) { return Letter(gen, +1); }
  static constexpr Letter negative(GeneratorId gen) { return Letter(gen, -1); }

  constexpr GeneratorId gen() const {
    return static_cast<GeneratorId>(code_ < 0 ? -code_ : code_);
  }
  constexpr int sign() const { return code_ < 0 ? -1 : +1; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr bool cancels(Letter other) const { return code_ == -other.code_; }

  /// Signed index: +i for x_i, -i for x_i^{-1}.
  constexpr std::int32_t code() const { return code_; }
  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  friend constexpr bool operator==(Letter, Letter) = default;

  /// Letter order used by shortlex: lower index first, x_i before x_i^{-1}.
  friend constexpr bool letter_less(Letter a, Letter b) {
    if (a.gen() != b.gen()) return a.gen() < b.gen();
    return a.sign() > b.sign();
  }

 private:
  std::int32_t code_ = 0;
};

class Word {
 public:
  /// The empty word over a rank-1 alphabet.
  Word() = default;
  /// The empty word over a rank-`rank` alphabet.
  explicit Word(std::size_t rank);

  /// Freely reduces `raw`. Throws AlphabetError on an index of 0 or > rank.
  static Word reduce(std::span<const Letter> raw, std::size_t rank);
  static Word reduce(std::initializer_list<Letter> raw, std::size_t rank) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()), rank);
  }
  /// Convenience for signed codes: {1, -2} is x1 X2.
  static Word from_codes(std::initializer_list<std::int32_t> codes,
                         std::size_t rank);
  static Word generator(GeneratorId gen, std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Subword [pos, pos+len); stays reduced.
  Word slice(std::size_t pos, std::size_t len) const;

  /// Same letters reinterpreted over a larger alphabet, with every index
  /// shifted by `offset`.
  Word relabel(std::size_t new_rank, std::int32_t offset = 0) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t rank_ = 1;
  std::vector<Letter> letters_;
};

/// Total shortlex order: length first, then letters under letter_less.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a, b);
  }
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// u^k for any integer k.
Word power(const Word& u, long k);
/// [a,b] = a^{-1} b^{-1} a b.
Word commutator(const Word& a, const Word& b);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

struct CyclicDecomposition {
  Word core;
  Word conjugator;  // w = conjugator^{-1} * core * conjugator
};
CyclicDecomposition cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

bool is_conjugate(const Word& u, const Word& v);

struct PrimitiveRoot {
  Word root;
  long exponent;
};
/// Throws DomainError on the empty word.
PrimitiveRoot primitive_root(const Word& w);
inline bool is_proper_power(const Word& w) {
  return primitive_root(w).exponent > 1;
}

std::set<GeneratorId> support(const Word& w);

/// k with v = u^k, if any. Throws DomainError when u is empty.
std::optional<long> cyclic_subgroup_member(const Word& u, const Word& v);

/// Shortlex-minimal element of the right coset <u> w = { u^k w }.
/// Throws DomainError when u is empty.
Word coset_rep(const Word& u, const Word& w);

std::vector<long> exponent_sum(const Word& w);

/// Text grammar: whitespace-separated `x<i>` / `X<i>` tokens, or `e`.
std::string to_string(const Word& w);
Word parse_word(std::string_view text, std::size_t rank);

/// Uniformly random reduced word of exactly `length` letters.
Word random_word(std::size_t rank, std::size_t length, std::mt19937_64& rng);

/// All reduced words of length <= max_len, in shortlex order.
std::vector<Word> enumerate_words(std::size_t rank, std::size_t max_len);

}  // namespace perfloc
