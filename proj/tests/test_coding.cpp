#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "tfc/tfc.hpp"

using namespace tfc;
using namespace tfc::test;

TEST_CASE("positions of 2s in eventually periodic reals") {
  EventualReal all2 = real("", "2");
  for (std::size_t k = 0; k < 20; ++k) REQUIRE(two_position(all2, k) == k);

  EventualReal z = real("0212", "2");
  REQUIRE(two_position(z, 0) == 1);
  REQUIRE(two_position(z, 1) == 3);
  REQUIRE(two_position(z, 2) == 4);

  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    EventualReal x = gen_real_in_H(rng);
    std::size_t prev = two_position(x, 0);
    REQUIRE(x.digit(prev) == 2);
    for (std::size_t k = 1; k <= 50; ++k) {
      std::size_t cur = two_position(x, k);
      CAPTURE(i, k);
      REQUIRE(cur > prev);
      REQUIRE(x.digit(cur) == 2);
      prev = cur;
    }
  }

  REQUIRE_THROWS_AS(two_position(real("2", "0"), 0), ForcingError);
}

TEST_CASE("parity digits count 1s between consecutive 2s") {
  EventualReal all2 = real("", "2");
  for (std::size_t k = 0; k < 10; ++k) REQUIRE(parity_digit(all2, k) == 0);

  // two 1s between positions 0 and 3
  REQUIRE(parity_digit(real("2112", "2"), 0) == 0);
  // one 1 in the block
  REQUIRE(parity_digit(real("212", "2"), 0) == 1);
}

TEST_CASE("parity stream analysis is exact") {
  ParityAnalysis a = parity_tail_analysis(real("", "2"));
  REQUIRE(a.transient.str() == "");
  REQUIRE(a.period.str() == "0");

  // one 1 per block between consecutive 2s
  ParityAnalysis b = parity_tail_analysis(real("", "12"));
  REQUIRE(b.period.str() == "1");
  for (std::size_t k = 0; k < 20; ++k) REQUIRE(b.digit(k) == 1);

  Rng rng(303);
  for (int i = 0; i < 100; ++i) {
    EventualReal z = gen_real_in_H(rng);
    ParityAnalysis p = parity_tail_analysis(z);
    for (std::size_t k = 0; k < 60; ++k) {
      CAPTURE(i, k);
      REQUIRE(p.digit(k) == parity_digit(z, k));
    }
  }
}

TEST_CASE("parity code of finite words") {
  REQUIRE(parity_code(Word3{}).str() == "");
  REQUIRE(parity_code(Word3::parse("2")).str() == "");
  REQUIRE(parity_code(Word3::parse("2112")).str() == "0");
  REQUIRE(parity_code(Word3::parse("212")).str() == "1");
  // 1s before the first 2 never count
  REQUIRE(parity_code(Word3::parse("1122")).str() == "0");
}

TEST_CASE("parity code is monotone under extension") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Word3 t = gen_word3(rng, 10);
    Word3 e = t;
    int extra = rng.range(0, 8);
    for (int j = 0; j < extra; ++j) e.push_back(rng.below(3));
    CAPTURE(t.str(), e.str());
    REQUIRE(parity_code(e).has_prefix(parity_code(t)));
  }
}

TEST_CASE("prefix through the (i+1)-th 2 settles the first i bits") {
  REQUIRE(check_alignment(real("0", "2"), 0));

  // hand count: "21212" + all 2s, 2s at 0,2,4,...: both blocks carry one 1
  EventualReal z = real("21212", "2");
  REQUIRE(parity_digit(z, 0) == 1);
  REQUIRE(parity_digit(z, 1) == 1);
  REQUIRE(check_alignment(z, 2));

  Rng rng(81);
  for (int i = 0; i < 100; ++i) {
    EventualReal x = gen_real_in_H(rng);
    for (std::size_t bits = 0; bits <= 20; ++bits) {
      CAPTURE(i, bits);
      REQUIRE(check_alignment(x, bits));
    }
  }
}

TEST_CASE("parity realizer frozen cases") {
  TCondition q = full_split("");
  REQUIRE(realize_parity(q, Word2{}) == q.stem);
  Word2 one;
  one.push_back(1);
  Word3 sigma = realize_parity(q, one);
  REQUIRE(sigma.str() == "212");
}

TEST_CASE("parity realizer handles forced 1s in blocks") {
  // forced 1 at every odd level
  OddLevelPredicate all{Word2{}, Word2::parse("1")};
  TCondition q = antichain_condition(all);
  Word2 zero;
  zero.push_back(0);
  Word3 sigma = realize_parity(q, zero);
  REQUIRE(member(q, sigma));
  REQUIRE(parity_code(sigma) == parity_code(q.stem).concat(zero));
}

TEST_CASE("parity realizer on conditions that force 2s") {
  // level 1 forces a 2; the walk anchors the first block on it, keeping
  // the splitting level before it free for the parity choice
  TCondition q = cond("", {"S", "F2"}, {"S"});
  for (const char* target : {"0", "1", "01", "10"}) {
    Word2 s = Word2::parse(target);
    Word3 sigma = realize_parity(q, s);
    CAPTURE(target);
    REQUIRE(member(q, sigma));
    REQUIRE(parity_code(sigma) == s);
  }
  // two adjacent forced 2s pin the first coded bit to 0 on every branch
  TCondition pinned = cond("", {"S", "F2", "F2"}, {"S"});
  Word2 one;
  one.push_back(1);
  REQUIRE_THROWS_AS(realize_parity(pinned, one), ForcingError);
}

TEST_CASE("parity realizer meets its contract on random inputs") {
  Rng rng(555);
  for (int i = 0; i < 150; ++i) {
    TCondition q = gen_condition(rng, /*strict=*/true);
    Word2 s = gen_word2(rng, 5);
    Word3 sigma = realize_parity(q, s);
    CAPTURE(i, s.str(), sigma.str());
    REQUIRE(member(q, sigma));
    REQUIRE(sigma.has_prefix(q.stem));
    REQUIRE(parity_code(sigma) == parity_code(q.stem).concat(s));
  }
}
