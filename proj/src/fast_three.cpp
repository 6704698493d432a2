#include "bidleak/fast_three.hpp"

#include <cmath>

namespace bidleak {

namespace {

using detail::int128;

BigInt to_big(int128 v)
{
  const bool negative = v < 0;
  auto u              = static_cast<detail::uint128>(negative ? -v : v);
  BigInt r            = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-r) : r;
}

// Fixed partition of [1, m] so the reduction order never depends on the
// number of workers.
constexpr std::size_t kChunks = 256;

struct Chunk
{
  std::int64_t first;
  std::int64_t last;
};

Chunk chunk_bounds(std::int64_t m, std::size_t chunk, std::size_t chunks)
{
  const auto lo = static_cast<std::int64_t>((static_cast<int128>(m) * chunk) / chunks) + 1;
  const auto hi = static_cast<std::int64_t>((static_cast<int128>(m) * (chunk + 1)) / chunks);
  return {lo, hi};
}

}  // namespace

CaseBreakdown printed_case_formulas(std::int64_t x, std::int64_t m)
{
  detail::require_bid_in_domain(x, m);
  using I = std::int64_t;
  const I third_minus_one = ceil_div<I>(x - 3, 3);  // ceil(x/3 - 1)
  const I half_up         = ceil_div<I>(x, 2);
  const I third_up        = ceil_div<I>(x, 3);
  const I two_thirds_up   = ceil_div<I>(2 * x, 3);
  const I three_halves    = floor_div<I>(3 * x, 2);

  CaseBreakdown b;
  b.x  = x;
  b.s1 = third_minus_one * (2 * half_up - third_up - 1);
  b.s2 = (2 * x <= m) ? (x + 1) * (two_thirds_up - 1) : (m - x + 1) * (two_thirds_up - 1);
  b.s3 = b.s2;

  b.c1 = (3 * x <= 2 * m) ? (three_halves - x + 1) * (three_halves - x + 1) : (m - x + 1) * (m - x + 1);
  if (3 * x <= m)
    b.c2 = (3 * x - three_halves) * (three_halves - x + 1);
  else if (3 * x <= 2 * m)
    b.c2 = (m - three_halves) * (three_halves - x + 1);
  else
    b.c2 = 0;
  b.c3 = b.c2;
  b.s4 = b.c1 + b.c2 + b.c3;
  return b;
}

std::vector<FormulaDiscrepancy> scan_printed_formulas(std::int64_t m)
{
  std::vector<FormulaDiscrepancy> found;
  for (std::int64_t x = 1; x <= m; ++x) {
    const auto counted = case_breakdown<std::int64_t>(x, m);
    const auto printed = printed_case_formulas(x, m);
    if (!(counted == printed))
      found.push_back({x, counted, printed});
  }
  return found;
}

BigInt c3_fast(Bid m, unsigned threads)
{
  if (m < 1)
    throw DomainError("domain bound m must be >= 1, got " + std::to_string(m));

  const std::size_t chunks = std::min<std::size_t>(kChunks, static_cast<std::size_t>(m));
  std::vector<BigInt> partial(chunks);

  if (m <= kFastThreeNativeLimit) {
    // Per-x counts stay below m^2 <= 2^62; the running sum below m^3 <= 2^93.
    parallel_for(chunks, threads, [&](std::size_t c) {
      const auto [first, last] = chunk_bounds(m, c, chunks);
      int128 sum               = 0;
      for (std::int64_t x = first; x <= last; ++x)
        sum += case_breakdown<std::int64_t>(x, m).total();
      partial[c] = to_big(sum);
    });
  } else {
    const BigInt bm = m;
    parallel_for(chunks, threads, [&](std::size_t c) {
      const auto [first, last] = chunk_bounds(m, c, chunks);
      BigInt sum               = 0;
      for (std::int64_t x = first; x <= last; ++x)
        sum += case_breakdown<BigInt>(BigInt(x), bm).total();
      partial[c] = std::move(sum);
    });
  }

  BigInt total = 0;
  for (const auto& p : partial)
    total += p;
  return total;
}

ThreePartyResult h3_fast(Bid m, unsigned threads)
{
  ThreePartyResult r;
  r.m              = m;
  r.c3_total       = c3_fast(m, threads);
  const BigInt bm  = m;
  const BigInt m3  = bm * bm * bm;
  r.vulnerability  = Rational(r.c3_total, m3);
  r.entropy_bits   = neg_log2(r.vulnerability);
  // m * |c/m^3 - 1/3| = |3c - m^3| / (3 m^2)
  const BigInt diff = abs(BigInt(3 * r.c3_total - m3));
  r.scaled_gap      = Rational(diff, 3 * bm * bm).convert_to<double>();
  return r;
}

double three_party_limit()
{
  return std::log2(3.0);
}

}  // namespace bidleak
