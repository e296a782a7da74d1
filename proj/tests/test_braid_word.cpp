#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidlam/braid_word.hpp"

using namespace braidlam;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len, int max_pow = 3) {
  std::uniform_int_distribution<int> lo_d(1, n - 1);
  std::uniform_int_distribution<int> pow_d(-max_pow, max_pow);
  std::vector<BraidLetter> ls;
  for (int i = 0; i < len; ++i) {
    int lo = lo_d(rng);
    std::uniform_int_distribution<int> hi_d(lo + 1, n);
    int hi = hi_d(rng);
    int p = pow_d(rng);
    if (p == 0) p = 1;
    ls.push_back({lo, hi, Int(p)});
  }
  return normalize(std::move(ls), n);
}

}  // namespace

TEST_CASE("delta length basics") {
  BraidWord w = parse_word("D(1,3)^3", 3);
  CHECK(delta_length(w) == doctest::Approx(2.0));
  CHECK(delta_length(BraidWord{3, {}}) == 0.0);
  BraidWord v = parse_word("s1 s2 s1", 3);
  CHECK(delta_length(v) == doctest::Approx(3.0));
  auto exact = delta_length_exact(v);
  CHECK(exact.letter_count() == 3);
}

TEST_CASE("expand to artin") {
  auto a = expand_to_artin(parse_word("D(1,3)", 3));
  REQUIRE(a.size() == 3);
  CHECK(a[0] == ArtinLetter{1, 1});
  CHECK(a[1] == ArtinLetter{2, 1});
  CHECK(a[2] == ArtinLetter{1, 1});
  auto b = expand_to_artin(parse_word("D(1,2)", 2));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == ArtinLetter{1, 1});
  auto c = expand_to_artin(parse_word("D(2,3)^-1", 3));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == ArtinLetter{2, -1});
  // expansion length formula
  BraidWord w = parse_word("D(1,4)^2 D(2,3)^-3", 4);
  CHECK(artin_length(w) == Int(2 * 6 + 3 * 1));
  CHECK_THROWS_AS(expand_to_artin(parse_word("D(1,4)^9999999999", 4)), std::length_error);
}

TEST_CASE("normalize merges and cancels") {
  auto w = normalize({{1, 3, 2}, {1, 3, -2}}, 4);
  CHECK(w.empty());
  auto v = normalize({{1, 3, 1}, {1, 3, 1}, {2, 4, 1}}, 4);
  REQUIRE(v.letters.size() == 2);
  CHECK(v.letters[0] == BraidLetter{1, 3, 2});
  CHECK(v.letters[1] == BraidLetter{2, 4, 1});
  // cascade: middle cancellation exposes equal neighbours
  auto u = normalize({{1, 2, 1}, {1, 3, 1}, {1, 3, -1}, {1, 2, 1}}, 3);
  REQUIRE(u.letters.size() == 1);
  CHECK(u.letters[0] == BraidLetter{1, 2, 2});
}

TEST_CASE("invert is an involution and reverses") {
  auto w = parse_word("D(1,3)^2 D(2,4)^-1", 4);
  auto i = invert(w);
  REQUIRE(i.letters.size() == 2);
  CHECK(i.letters[0] == BraidLetter{2, 4, 1});
  CHECK(i.letters[1] == BraidLetter{1, 3, -2});
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto r = random_word(rng, 5, 8);
    CHECK(invert(invert(r)) == r);
    CHECK(delta_length(invert(r)) == doctest::Approx(delta_length(r)));
  }
}

TEST_CASE("delta length subadditive under concat") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto u = random_word(rng, 5, 6);
    auto v = random_word(rng, 5, 6);
    CHECK(delta_length(concat(u, v)) <= delta_length(u) + delta_length(v) + 1e-9);
  }
}

TEST_CASE("strand permutation") {
  // sigma_1 swaps 1,2
  auto p = strand_permutation(parse_word("s1", 3));
  CHECK(p == std::vector<int>{2, 1, 3});
  // D(1,3) reverses 1..3
  auto q = strand_permutation(parse_word("D(1,3)", 3));
  CHECK(q == std::vector<int>{3, 2, 1});
  auto r = strand_permutation(parse_word("D(1,3)^2", 3));
  CHECK(r == std::vector<int>{1, 2, 3});
}

TEST_CASE("remove_strand examples") {
  auto w = remove_strand(parse_word("s2 s2", 3), 1);
  CHECK(w.n == 2);
  REQUIRE(w.letters.size() == 1);
  CHECK(w.letters[0] == BraidLetter{1, 2, 2});

  auto v = remove_strand(parse_word("s1 s1", 2), 1);
  CHECK(v.n == 1);
  CHECK(v.empty());

  CHECK_THROWS_AS(remove_strand(parse_word("s1", 2), 1), std::invalid_argument);
}

TEST_CASE("include_shift round trip") {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    auto w = random_word(rng, 4, 6);
    auto s = include_shift(w);
    CHECK(s.n == 5);
    CHECK(remove_strand(s, 1) == w);
  }
  CHECK(include_shift(parse_word("s1", 2)) == parse_word("s2", 3));
}

TEST_CASE("parse and format round trip") {
  auto w = parse_word("s1 s2^-1 D(1,4)^123456789012345678901 s3", 4);
  CHECK(parse_word(format_word(w), 4) == w);
  CHECK_THROWS(parse_word("x1", 3));
  CHECK_THROWS(parse_word("s9", 3));
}
