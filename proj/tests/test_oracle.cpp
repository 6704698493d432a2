#include "bidleak/oracle.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>

using namespace bidleak;
using bidleak::testing::for_each_tuple;

namespace {

// c_n(m) straight from the definition.
std::uint64_t naive_fixpoints(int n, Bid m)
{
  std::uint64_t count = 0;
  for_each_tuple(n, m, [&](const BidVector& t) { count += auction_price(t) == t[0] ? 1 : 0; });
  return count;
}

}  // namespace

TEST_CASE("build_channel examples")
{
  const auto two = build_channel(2, 9);
  std::uint64_t diagonal = 0;
  for (Bid o = 1; o <= 9; ++o)
    diagonal += two.count(o, o);
  CHECK(diagonal == 45);

  const auto one = build_channel(1, 5);
  for (Bid o = 1; o <= 5; ++o)
    for (Bid x = 1; x <= 5; ++x)
      CHECK(one.count(o, x) == (o == x ? 1u : 0u));

  const auto three = build_channel(3, 2);
  CHECK(three.count(1, 1) + three.count(2, 2) == 6);
  CHECK(three.count(1, 1) == 3);
  CHECK(three.count(1, 2) == 1);
}

TEST_CASE("build_channel argument errors")
{
  CHECK_THROWS_AS(build_channel(0, 5), DomainError);
  CHECK_THROWS_AS(build_channel(2, 0), DomainError);
  CHECK_THROWS_AS(build_channel(2, 5, 3), DomainError);
  CHECK_THROWS_AS(build_channel(2, 5, 0), DomainError);

  EnumerationOptions tight;
  tight.budget = 99;
  CHECK_THROWS_AS(build_channel(2, 10, 1, tight), ResourceError);
  tight.budget = 100;
  CHECK_NOTHROW(build_channel(2, 10, 1, tight));
  // default budget refuses 100^10 without wrapping anything
  CHECK_THROWS_AS(count_fixpoint_tuples(10, 100), ResourceError);
}

TEST_CASE("fixpoint counts match the definition")
{
  CHECK(count_fixpoint_tuples(2, 9) == 45);
  CHECK(count_fixpoint_tuples(1, 17) == 17);
  CHECK(count_fixpoint_tuples(3, 2) == 6);

  // frozen from an independent brute force over the revenue definition
  const std::uint64_t c3[] = {1, 6, 16, 33, 60, 98, 149, 216, 300, 403, 528, 676};
  const std::uint64_t c4[] = {1, 11, 45, 122, 266, 506, 887, 1452};
  const std::uint64_t c5[] = {1, 22, 125, 440, 1204, 2725, 5536};
  for (Bid m = 1; m <= 12; ++m)
    CHECK(count_fixpoint_tuples(3, m) == c3[m - 1]);
  for (Bid m = 1; m <= 8; ++m)
    CHECK(count_fixpoint_tuples(4, m) == c4[m - 1]);
  for (Bid m = 1; m <= 7; ++m)
    CHECK(count_fixpoint_tuples(5, m) == c5[m - 1]);

  for (int n = 1; n <= 4; ++n)
    for (Bid m = 1; m <= 6; ++m)
      CHECK(count_fixpoint_tuples(n, m) == naive_fixpoints(n, m));
}

TEST_CASE("vulnerability examples")
{
  CHECK(vulnerability_oracle(2, 9) == Rational(5, 9));
  CHECK(vulnerability_oracle(1, 7) == 1);
  CHECK(vulnerability_oracle(3, 2) == Rational(3, 4));

  for (int n = 1; n <= 4; ++n)
    for (Bid m = 1; m <= 7; ++m) {
      const Rational v = vulnerability_oracle(n, m);
      CHECK(v * ipow(BigInt(m), static_cast<unsigned>(n)) == count_fixpoint_tuples(n, m));
      CHECK(v >= Rational(1, m));
      CHECK(v <= 1);
    }
}

TEST_CASE("min_entropy_oracle examples")
{
  const auto a = min_entropy_oracle(2, 1);
  CHECK(a.posterior_bits == 0.0);
  CHECK(a.vulnerability == 1);

  const auto b = min_entropy_oracle(2, 9);
  CHECK(b.posterior_bits == doctest::Approx(-std::log2(5.0 / 9.0)).epsilon(1e-14));
  CHECK(b.posterior_bits == doctest::Approx(0.8480).epsilon(1e-4));

  const auto c = min_entropy_oracle(1, 8);
  CHECK(c.posterior_bits == 0.0);
  CHECK(c.prior_bits == 3.0);
  CHECK(c.engine == Engine::Oracle);

  for (int n = 1; n <= 4; ++n)
    for (Bid m = 1; m <= 8; ++m) {
      const auto r = min_entropy_oracle(n, m);
      CHECK(r.posterior_bits >= 0.0);
      CHECK(r.posterior_bits <= r.prior_bits + 1e-12);
    }
}

TEST_CASE("channel properties")
{
  for (int n = 2; n <= 4; ++n) {
    const Bid max_m = n == 4 ? 8 : 12;
    for (Bid m = 1; m <= max_m; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto ch = build_channel(n, m);
      // every column is a full distribution over outputs
      for (Bid x = 1; x <= m; ++x)
        REQUIRE(ch.counts.col(x - 1).sum() == ch.spectator_tuples());
      // the best explanation of output o is the bid o itself
      for (Bid o = 1; o <= m; ++o)
        REQUIRE(ch.counts.row(o - 1).maxCoeff() == ch.count(o, o));
      REQUIRE(vulnerability_from_channel(ch) * ipow(BigInt(m), static_cast<unsigned>(n)) ==
              count_fixpoint_tuples(ch));
    }
  }
}

TEST_CASE("channel does not depend on the targeted position")
{
  for (int n = 2; n <= 3; ++n)
    for (Bid m = 1; m <= 10; ++m) {
      const auto first = build_channel(n, m, 1);
      for (int t = 2; t <= n; ++t)
        CHECK(build_channel(n, m, t).counts == first.counts);
    }
}

TEST_CASE("channel is identical at any worker count")
{
  EnumerationOptions serial;
  EnumerationOptions wide;
  wide.threads = 16;
  CHECK(build_channel(4, 9, 2, serial).counts == build_channel(4, 9, 2, wide).counts);
}

TEST_CASE("best guess strategy")
{
  CHECK(best_guess_strategy(2, 9).guess_for(3) == 3);
  CHECK(best_guess_strategy(1, 4).guess_for(2) == 2);
  const auto s3 = best_guess_strategy(3, 2);
  CHECK(s3.guess_for(1) == 1);
  CHECK(s3.guesses[0].hits == 3);
  CHECK(s3.guesses[0].ties == std::vector<Bid>{1});

  for (int n = 1; n <= 4; ++n)
    for (Bid m = 1; m <= 7; ++m) {
      const auto ch = build_channel(n, m);
      const auto st = best_guess_strategy(ch);
      for (const auto& g : st.guesses) {
        REQUIRE(g.hits == ch.counts.row(g.output - 1).maxCoeff());
        REQUIRE(std::find(g.ties.begin(), g.ties.end(), g.output) != g.ties.end());
        REQUIRE(g.best == g.ties.front());
      }
      CHECK(expected_success(st, ch) == vulnerability_oracle(n, m));
    }
}

TEST_CASE("brute-force case classification covers every fixpoint")
{
  CHECK(case_breakdown_bruteforce(1, 12) == CaseBreakdown{1, 0, 0, 0, 5, 1, 2, 2});
  const auto b9 = case_breakdown_bruteforce(9, 12);
  CHECK(b9.s1 == 12);
  CHECK(b9.s2 == 20);
  CHECK(b9.s3 == 20);
  CHECK(b9.s4 == 16);
  CHECK(b9.s4 == b9.c1 + b9.c2 + b9.c3);
  CHECK_THROWS_AS(case_breakdown_bruteforce(13, 12), DomainError);
}
