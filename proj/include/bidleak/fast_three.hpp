#pragma once

// Three-party fixpoint count c_3(m) in O(m).
//
// For each first bid x the fixpoint pairs (y, z) split by the position of x
// in the sorted triple; every piece is a product of integer ranges cut out by
// linear inequalities with denominators 2 and 3. All counts here come from
// those inequality systems through exact interval counting. The closed
// ceiling/floor expressions are evaluated separately (printed_case_formulas)
// so that the two can be compared.

#include "bidleak/auction.hpp"
#include "bidleak/case_breakdown.hpp"
#include "bidleak/errors.hpp"
#include "bidleak/numeric.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bidleak {

/// One end of an interval on the real line at num/den (den > 0).
template <class Int>
struct Bound
{
  Int num;
  Int den = 1;
  bool closed = true;
};

template <class Int> Bound<Int> at_least(Int num, Int den = 1) { return {num, den, true}; }
template <class Int> Bound<Int> greater_than(Int num, Int den = 1) { return {num, den, false}; }
template <class Int> Bound<Int> at_most(Int num, Int den = 1) { return {num, den, true}; }
template <class Int> Bound<Int> less_than(Int num, Int den = 1) { return {num, den, false}; }

template <class Int>
Int floor_div(const Int& a, const Int& b)
{
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

template <class Int>
Int ceil_div(const Int& a, const Int& b)
{
  return -floor_div<Int>(-a, b);
}

/// Smallest integer t satisfying t >= lower (or t > lower when open).
template <class Int>
Int first_integer_above(const Bound<Int>& lower)
{
  return lower.closed ? ceil_div(lower.num, lower.den) : floor_div(lower.num, lower.den) + 1;
}

/// Largest integer t satisfying t <= upper (or t < upper when open).
template <class Int>
Int last_integer_below(const Bound<Int>& upper)
{
  return upper.closed ? floor_div(upper.num, upper.den) : ceil_div(upper.num, upper.den) - 1;
}

/// Closed integer range [lo, hi]; empty when hi < lo.
template <class Int>
struct IntRange
{
  Int lo;
  Int hi;

  Int size() const { return hi < lo ? Int(0) : Int(hi - lo + 1); }

  IntRange intersect(const IntRange& other) const
  {
    return {std::max(lo, other.lo), std::min(hi, other.hi)};
  }
};

template <class Int>
IntRange<Int> integer_range(const Bound<Int>& lower, const Bound<Int>& upper)
{
  return {first_integer_above(lower), last_integer_below(upper)};
}

/// Number of integers strictly or non-strictly between two rational bounds.
template <class Int>
Int count_integers_in_interval(const Bound<Int>& lower, const Bound<Int>& upper)
{
  return integer_range(lower, upper).size();
}

namespace detail {

template <class Int>
void require_bid_in_domain(const Int& x, const Int& m)
{
  if (m < 1 || x < 1 || x > m)
    throw DomainError("need 1 <= x <= m for the three-party case counts");
}

// Spectator values allowed by the domain: [1, m].
template <class Int>
IntRange<Int> domain(const Int& m)
{
  return {Int(1), m};
}

}  // namespace detail

/// Pairs with x > y and x > z. The price is x exactly when
///   (y < x/3 and z < x/3) or (y < x/3 and x/3 <= z < x/2) or (x/3 <= y < x/2 and z < x/3),
/// three disjoint pieces, the last two mirror images.
template <class Int>
Int case1_count(const Int& x, const Int& m)
{
  detail::require_bid_in_domain(x, m);
  const auto below_x   = detail::domain(m).intersect({Int(1), Int(x - 1)});
  const auto low       = below_x.intersect(integer_range(at_least<Int>(1), less_than<Int>(x, 3)));
  const auto mid       = below_x.intersect(integer_range(at_least<Int>(x, 3), less_than<Int>(x, 2)));
  const Int a          = low.size();
  const Int b          = mid.size();
  return a * a + 2 * a * b;
}

/// |S2| for pairs with y >= x > z: x <= y <= 2x and z < 2x/3.
template <class Int>
Int case2_count(const Int& x, const Int& m)
{
  detail::require_bid_in_domain(x, m);
  const auto ys = detail::domain(m).intersect(integer_range(at_least<Int>(x), at_most<Int>(2 * x)));
  const auto zs = detail::domain(m)
                      .intersect({Int(1), Int(x - 1)})
                      .intersect(integer_range(at_least<Int>(1), less_than<Int>(2 * x, 3)));
  return ys.size() * zs.size();
}

/// |S2| + |S3|; the two are mirror images in (y, z).
template <class Int>
Int case23_count(const Int& x, const Int& m)
{
  return 2 * case2_count(x, m);
}

/// c1 + c2 + c3 for pairs with x <= y and x <= z. The price is x exactly
/// when one of y, z is at most 3x/2 and the other at most 3x.
template <class Int>
BasicCaseBreakdown<Int> case4_parts(const Int& x, const Int& m)
{
  detail::require_bid_in_domain(x, m);
  const auto near = detail::domain(m).intersect(integer_range(at_least<Int>(x), at_most<Int>(3 * x, 2)));
  const auto far  = detail::domain(m).intersect(integer_range(greater_than<Int>(3 * x, 2), at_most<Int>(3 * x)));
  BasicCaseBreakdown<Int> b;
  b.x  = x;
  b.c1 = near.size() * near.size();
  b.c2 = near.size() * far.size();
  b.c3 = b.c2;
  b.s4 = b.c1 + b.c2 + b.c3;
  return b;
}

template <class Int>
Int case4_count(const Int& x, const Int& m)
{
  return case4_parts(x, m).s4;
}

template <class Int>
BasicCaseBreakdown<Int> case_breakdown(const Int& x, const Int& m)
{
  auto b = case4_parts(x, m);
  b.s1   = case1_count(x, m);
  b.s2   = case2_count(x, m);
  b.s3   = b.s2;
  return b;
}

/// The closed ceiling/floor expressions for each piece, evaluated literally
/// (branch conditions included) rather than derived from the inequalities.
CaseBreakdown printed_case_formulas(std::int64_t x, std::int64_t m);

struct FormulaDiscrepancy
{
  std::int64_t x = 0;
  CaseBreakdown from_inequalities;
  CaseBreakdown from_formulas;
};

/// Every x in [1, m] where the printed formulas disagree with the counts.
std::vector<FormulaDiscrepancy> scan_printed_formulas(std::int64_t m);

/// Above this bound per-x counts are computed in arbitrary precision.
inline constexpr std::int64_t kFastThreeNativeLimit = std::int64_t{1} << 31;

/// c_3(m) = sum over x of |S1| + |S2| + |S3| + |S4|.
BigInt c3_fast(Bid m, unsigned threads = 1);

struct ThreePartyResult
{
  Bid m = 0;
  BigInt c3_total;
  Rational vulnerability;
  double entropy_bits = 0.0;
  double scaled_gap   = 0.0;  // m * |V - 1/3|
};

ThreePartyResult h3_fast(Bid m, unsigned threads = 1);

/// Limit of the three-party posterior entropy as m grows: log2 3 bits.
double three_party_limit();

}  // namespace bidleak
