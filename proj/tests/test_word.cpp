#include <random>

#include "doctest.h"
#include "perfloc/word.hpp"

using namespace perfloc;

namespace {

Word w3(std::string_view text) { return parse_word(text, 3); }

// Brute force: is there g with |g| <= max_g and g^-1 u g == v?
bool conjugate_by_search(const Word& u, const Word& v, std::size_t max_g) {
  for (const Word& g : enumerate_words(u.rank(), max_g)) {
    if (invert(g) * u * g == v) return true;
  }
  return false;
}

// Brute force: shortlex minimum of u^k w over a wide k window.
Word coset_rep_by_window(const Word& u, const Word& w, long window) {
  Word best = w;
  for (long k = -window; k <= window; ++k) {
    Word cand = power(u, k) * w;
    if (shortlex_less(cand, best)) best = cand;
  }
  return best;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  // a = x1, b = x2
  CHECK(Word::from_codes({1, -1}, 2).empty());
  CHECK(Word::from_codes({1, 2, -2, 1, -1}, 2) == Word::from_codes({1}, 2));
  CHECK(Word::from_codes({1, 2}, 2).size() == 2);
  CHECK_THROWS_AS(Word::from_codes({3}, 2), AlphabetError);
  CHECK_THROWS_AS(Word::from_codes({0}, 2), AlphabetError);
}

TEST_CASE("multiply and invert") {
  CHECK((w3("x1") * w3("X1")).empty());
  CHECK(invert(w3("x1 x2")) == w3("X2 X1"));
  CHECK(w3("x1 x2") * w3("X2 x3") == w3("x1 x3"));
  CHECK_THROWS_AS(w3("x1") * parse_word("x1", 2), RankMismatch);
}

TEST_CASE("commutator convention [a,b] = a^-1 b^-1 a b") {
  CHECK(commutator(w3("x1"), w3("x2")) == w3("X1 X2 x1 x2"));
  CHECK(commutator(w3("x1"), w3("x1")).empty());
  // expanded by hand: (ab)^-1 c^-1 (ab) c
  CHECK(commutator(w3("x1 x2"), w3("x3")) == w3("X2 X1 X3 x1 x2 x3"));
}

TEST_CASE("cyclic_reduce peels conjugating letters") {
  auto [core, conj] = cyclic_reduce(w3("x1 x2 X1"));
  CHECK(core == w3("x2"));
  CHECK(conj == w3("X1"));
  auto [core2, conj2] = cyclic_reduce(w3("x1 x2"));
  CHECK(core2 == w3("x1 x2"));
  CHECK(conj2.empty());
  auto [core3, conj3] = cyclic_reduce(w3("X1 x2 x1"));
  CHECK(core3 == w3("x2"));
  CHECK(conj3 == w3("x1"));
  CHECK(cyclic_reduce(Word(3)).core.empty());
}

TEST_CASE("is_conjugate examples agree with conjugator search") {
  CHECK(is_conjugate(w3("x1 x2"), w3("x2 x1")));
  CHECK_FALSE(is_conjugate(w3("x1"), w3("x2")));
  // b a b^-1 a^-1 is the inverse of a b a^-1 b^-1, not one of its rotations;
  // a commutator of free generators is not conjugate to its inverse.
  const Word u = w3("x1 x2 X1 X2");
  const Word v = w3("x2 x1 X2 X1");
  CHECK(v == invert(u));
  CHECK_FALSE(conjugate_by_search(u, v, 4));
  CHECK_FALSE(is_conjugate(u, v));
  // a rotation of it is conjugate
  CHECK(is_conjugate(u, w3("X2 x1 x2 X1")));
  CHECK(conjugate_by_search(u, w3("X2 x1 x2 X1"), 4));
}

TEST_CASE("primitive_root examples") {
  auto r = primitive_root(w3("x1 x2 x1 x2"));
  CHECK(r.root == w3("x1 x2"));
  CHECK(r.exponent == 2);
  r = primitive_root(w3("x1"));
  CHECK(r.root == w3("x1"));
  CHECK(r.exponent == 1);
  r = primitive_root(w3("x1 x1 x2 x1 x1 x2 x1 x1 x2"));
  CHECK(r.root == w3("x1 x1 x2"));
  CHECK(r.exponent == 3);
  // root of a conjugated power is conjugated back
  r = primitive_root(w3("x3 x1 x2 x1 x2 X3"));
  CHECK(r.root == w3("x3 x1 x2 X3"));
  CHECK(r.exponent == 2);
  CHECK_THROWS_AS(primitive_root(Word(3)), DomainError);
}

TEST_CASE("support and exponent_sum") {
  CHECK(support(w3("X1 X2 x1 x2")) == std::set<GeneratorId>{1, 2});
  CHECK(support(Word(3)).empty());
  CHECK(support(w3("x1 x3 X1")) == std::set<GeneratorId>{1, 3});
  CHECK(exponent_sum(parse_word("X1 X2 x1 x2", 2)) == std::vector<long>{0, 0});
  CHECK(exponent_sum(parse_word("x1 x1 x2 X1", 2)) == std::vector<long>{1, 1});
  CHECK(exponent_sum(Word(2)) == std::vector<long>{0, 0});
}

TEST_CASE("cyclic_subgroup_member") {
  CHECK(cyclic_subgroup_member(w3("x1 x1"), w3("x1 x1 x1 x1")) == 2);
  CHECK_FALSE(cyclic_subgroup_member(w3("x1"), w3("x2")).has_value());
  const Word ab = w3("x1 x2");
  const Word target = invert(ab * ab * ab);
  auto k = cyclic_subgroup_member(ab, target);
  REQUIRE(k.has_value());
  CHECK(*k == -3);
  CHECK(power(ab, *k) == target);
  CHECK_FALSE(cyclic_subgroup_member(w3("x1 x1"), w3("x1")).has_value());
  CHECK_THROWS_AS(cyclic_subgroup_member(Word(3), w3("x1")), DomainError);
}

TEST_CASE("coset_rep examples") {
  CHECK(coset_rep(w3("x1 x1"), w3("x1 x1 x2")) == w3("x2"));
  CHECK(coset_rep_by_window(w3("x1 x1"), w3("x1 x1 x2"), 10) == w3("x2"));
  CHECK(coset_rep(w3("x1"), w3("x1 x1 x1 x1 x1")).empty());
  CHECK(coset_rep(w3("x1"), w3("x2")) == w3("x2"));
  CHECK_THROWS_AS(coset_rep(Word(3), w3("x2")), DomainError);
}

TEST_CASE("shortlex puts x_i before X_i before x_{i+1}") {
  CHECK(shortlex_less(w3("x1"), w3("X1")));
  CHECK(shortlex_less(w3("X1"), w3("x2")));
  CHECK(shortlex_less(w3("x3"), w3("x1 x1")));
  CHECK_FALSE(shortlex_less(w3("x2"), w3("x2")));
}

TEST_CASE("word text grammar") {
  CHECK(to_string(parse_word("X1 X2 x1 x2", 2)) == "X1 X2 x1 x2");
  CHECK(parse_word("e", 2).empty());
  CHECK(to_string(Word(2)) == "e");
  CHECK(parse_word("x1 X1", 2).empty());
  CHECK_THROWS_AS(parse_word("x0", 2), AlphabetError);
  CHECK_THROWS_AS(parse_word("x3", 2), AlphabetError);
  CHECK_THROWS_AS(parse_word("y1", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x1a", 2), ParseError);
  CHECK_THROWS_AS(parse_word("", 2), ParseError);
  CHECK_THROWS_AS(parse_word("e x1", 2), ParseError);
}

TEST_CASE("enumerate_words counts reduced words") {
  // 1 + 2r + 2r(2r-1) + ... for r = 2
  CHECK(enumerate_words(2, 3).size() == 1 + 4 + 12 + 36);
  auto words = enumerate_words(2, 3);
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(shortlex_less(words[i - 1], words[i]));
  }
}

// ---- properties on random samples ----

TEST_CASE("property: reduce idempotent, group laws") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(-3, 3);
  std::uniform_int_distribution<std::size_t> len(0, 20);
  for (int t = 0; t < 300; ++t) {
    std::vector<Letter> raw;
    for (std::size_t i = len(rng); i > 0; --i) {
      int c = letter(rng);
      raw.push_back(Letter::from_code(c == 0 ? 1 : c));
    }
    const Word once = Word::reduce(raw, 3);
    CHECK(Word::reduce(once.letters(), 3) == once);

    const Word u = random_word(3, len(rng), rng);
    const Word v = random_word(3, len(rng), rng);
    const Word w = random_word(3, len(rng), rng);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * invert(u)).empty());
    auto su = exponent_sum(u), sv = exponent_sum(v), suv = exponent_sum(u * v);
    for (std::size_t i = 0; i < 3; ++i) CHECK(suv[i] == su[i] + sv[i]);
  }
}

TEST_CASE("property: conjugacy is an equivalence and matches search") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  for (int t = 0; t < 200; ++t) {
    const Word u = random_word(2, len(rng), rng);
    const Word g = random_word(2, len(rng), rng);
    const Word h = random_word(2, len(rng), rng);
    const Word v = invert(g) * u * g;
    const Word w = invert(h) * v * h;
    CHECK(is_conjugate(u, u));
    CHECK(is_conjugate(u, v));
    CHECK(is_conjugate(v, u));
    CHECK(is_conjugate(u, w));
  }
  // Exhaustive small agreement with the brute-force conjugator search.
  auto words = enumerate_words(2, 3);
  for (const Word& u : words) {
    for (const Word& v : words) {
      CHECK(is_conjugate(u, v) == conjugate_by_search(u, v, 4));
    }
  }
}

TEST_CASE("property: primitive roots rebuild the word") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  std::uniform_int_distribution<long> exp(1, 4);
  for (int t = 0; t < 300; ++t) {
    const Word base = random_word(2, len(rng), rng);
    const Word w = power(base, exp(rng));
    const auto r = primitive_root(w);
    Word rebuilt(2);
    for (long k = 0; k < r.exponent; ++k) rebuilt = rebuilt * r.root;
    CHECK(rebuilt == w);
    CHECK(primitive_root(r.root).exponent == 1);
  }
}

TEST_CASE("property: conjugation never loses generators of a cyclic word") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  for (int t = 0; t < 500; ++t) {
    const Word w = cyclic_reduce(random_word(3, len(rng), rng)).core;
    const Word g = random_word(3, len(rng), rng);
    const auto inner = support(w);
    const auto outer = support(invert(g) * w * g);
    for (auto gen : inner) CHECK(outer.count(gen) == 1);
  }
}

TEST_CASE("property: coset_rep is a coset invariant and shortlex minimal") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<std::size_t> ulen(1, 4);
  std::uniform_int_distribution<std::size_t> wlen(0, 6);
  for (int t = 0; t < 200; ++t) {
    const Word u = random_word(2, ulen(rng), rng);
    const Word w = random_word(2, wlen(rng), rng);
    const Word rep = coset_rep(u, w);
    CHECK(rep == coset_rep_by_window(u, w, 20));
    for (long k = -5; k <= 5; ++k) CHECK(coset_rep(u, power(u, k) * w) == rep);
    CHECK(cyclic_subgroup_member(u, rep * invert(w)).has_value());
  }
}

TEST_CASE("random_word gives reduced words of the requested length") {
  std::mt19937_64 rng(16);
  for (std::size_t n = 0; n < 30; ++n) CHECK(random_word(1, n, rng).size() == n);
  for (std::size_t n = 0; n < 30; ++n) CHECK(random_word(4, n, rng).size() == n);
}
