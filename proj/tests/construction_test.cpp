#include <gtest/gtest.h>

#include <set>

#include "repwords/construction.hpp"
#include "support.hpp"

using namespace repwords;

namespace {

std::size_t pow_n(std::size_t n, int e) {
  std::size_t out = 1;
  while (e--) out *= n;
  return out;
}

std::set<letter> values_of(const word& w, std::size_t from, std::size_t len) {
  return std::set<letter>(w.begin() + from, w.begin() + from + len);
}

}  // namespace

TEST(Build, Examples) {
  EXPECT_EQ(build(3, 1).r, parse_word("789456123"));
  EXPECT_EQ(build(1, 1).s, (word{1, 1}));
  const auto c = build(2, 1);
  EXPECT_EQ(c.s.size(), 128u);
  EXPECT_EQ(repeats(c.s), 64u);
  EXPECT_EQ(c.p, parse_word("1234"));
  EXPECT_EQ(c.t, parse_word("12"));
  EXPECT_EQ(build(2, 2).t, parse_word("1122"));
  EXPECT_EQ(build(2, 2).r, parse_word("33441122"));
}

TEST(Build, SmallQByHand) {
  // n = 1, k = 2: p = 1, t = 11, r = r' = 11, q = 1·11.
  const auto c = build(1, 2);
  EXPECT_EQ(c.q, parse_word("111"));
  EXPECT_EQ(c.s, parse_word("111"));
}

TEST(Build, RejectsZeroParameters) {
  EXPECT_THROW(build(0, 1), precondition_error);
  EXPECT_THROW(build(1, 0), precondition_error);
}

TEST(Build, LengthAndMultiplicityInvariants) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto c = build(n, k);
      EXPECT_EQ(c.p.size(), n * n);
      EXPECT_EQ(c.t.size(), k * n);
      EXPECT_EQ(c.r.size(), k * n * n);
      EXPECT_EQ(c.r_prime.size(), k * pow_n(n, 4));
      EXPECT_EQ(c.q.size(), (k + 1) * pow_n(n, 4));
      EXPECT_EQ(c.s.size(), (k + 1) * pow_n(n, 6));
      EXPECT_EQ(repeats(c.s), k * pow_n(n, 6));
      for (const auto& [v, count] : c.s.multiplicities()) ASSERT_EQ(count, k + 1) << "n=" << n << " k=" << k;
    }
}

TEST(Build, PBlocksShareValuesWithExactlyOneRBlock) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto c = build(n, k);
      const std::size_t plen = n * n, rlen = k * n * n, blocks = n * n;
      const std::size_t r_start = plen * blocks;
      for (std::size_t b = 0; b < blocks; ++b) {
        const auto pv = values_of(c.q, b * plen, plen);
        std::size_t matches = 0;
        for (std::size_t rb = 0; rb < blocks; ++rb)
          if (values_of(c.q, r_start + rb * rlen, rlen) == pv) ++matches;
        EXPECT_EQ(matches, 1u) << "n=" << n << " k=" << k << " block " << b;
      }
    }
}

TEST(Build, EveryValueOfSStaysInsideOneQBlock) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto c = build(n, k);
      const std::size_t qlen = c.q.size();
      std::map<letter, std::set<std::size_t>> blocks_of;
      for (std::size_t i = 0; i < c.s.size(); ++i) blocks_of[c.s[i]].insert(i / qlen);
      for (const auto& [v, bs] : blocks_of) EXPECT_EQ(bs.size(), 1u) << "value " << v;
    }
}

TEST(Verify, Examples) {
  auto rep = verify(2, 1);
  EXPECT_EQ(rep.length, 128u);
  EXPECT_EQ(rep.repeats, 64u);
  EXPECT_TRUE(rep.multiplicity_ok);
  EXPECT_EQ(rep.avoided.size(), 7u);
  EXPECT_TRUE(rep.all_avoided());

  rep = verify(1, 1);
  EXPECT_EQ(rep.length, 2u);
  EXPECT_EQ(rep.repeats, 1u);
  EXPECT_TRUE(rep.ok());

  rep = verify(1, 2);
  EXPECT_EQ(rep.length, 3u);
  EXPECT_EQ(rep.repeats, 2u);
  EXPECT_TRUE(rep.ok());
}

TEST(Verify, GeneralisedConstructionForLargerK) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 3}}) {
    const auto rep = verify(n, k);
    EXPECT_TRUE(rep.ok()) << "n=" << n << " k=" << k;
    EXPECT_EQ(rep.repeats, k * pow_n(n, 6));
  }
  // From n = 2 the stuttered r-blocks let both runs share a doubled top letter.
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
    const auto rep = verify(n, k);
    EXPECT_TRUE(rep.multiplicity_ok);
    EXPECT_EQ(rep.repeats, k * pow_n(n, 6));
    for (const auto& [entry, avoided] : rep.avoided) {
      const bool mixed = entry.id.kind == family_kind::double_run && entry.id.e1 != entry.id.e2;
      EXPECT_EQ(avoided, !mixed) << to_string(entry.id);
      if (!avoided) {
        EXPECT_TRUE(contains(build(n, k).s, entry.pat));
      }
    }
  }
}

TEST(Verify, GuardRejectsLargeInstances) {
  EXPECT_THROW(verify(7, 1), size_error);  // 2·7⁶ > 10⁵
  EXPECT_THROW(verify(2, 1, 100), size_error);
  EXPECT_NO_THROW(verify(2, 1, 128));
}

TEST(VerifyQLemma, Examples) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto rep = verify_q_lemma(n, 1);
    EXPECT_TRUE(rep.all_absent()) << "n=" << n;
  }
  EXPECT_EQ(build(1, 1).q, (word{1, 1}));
}

TEST(VerifyQLemma, GeneralisationForKTwoIsReportedNotAsserted) {
  EXPECT_TRUE(verify_q_lemma(1, 2).all_absent());
  EXPECT_FALSE(verify_q_lemma(2, 2).all_absent());
  // 9 11 15 15 11 9 inside q(2,2)
  const word q = build(2, 2).q;
  const occurrence occ{5, 7, 33, 34, 41, 45};
  EXPECT_EQ(subword(q, occ), (word{9, 11, 15, 15, 11, 9}));
  EXPECT_TRUE(is_occurrence_of(q, occ, pattern(parse_word("012210"))));
}

TEST(MaxMonotoneOfR, Examples) {
  const auto three = max_monotone_of_r(3, 1);
  EXPECT_EQ(three.nondecreasing, 3u);
  EXPECT_EQ(three.nonincreasing, 3u);
  EXPECT_EQ(three.max(), 3u);
  EXPECT_EQ(max_monotone_of_r(1, 1).max(), 1u);

  // r = 33441122: 3344 and 4422 are both longest.
  const word r = build(2, 2).r;
  const auto two = max_monotone_of_r(2, 2);
  EXPECT_EQ(two.nondecreasing, repwords::testing::dp_longest(r, true));
  EXPECT_EQ(two.nonincreasing, repwords::testing::dp_longest(r, false));
  EXPECT_EQ(two.nondecreasing, 4u);
  EXPECT_EQ(two.nonincreasing, 4u);
}
