#pragma once

// Digital goods auction pricing.
//
// The seller picks one price p from the submitted bids; every bidder whose
// bid is at least p buys at p. The chosen price maximizes p * #buyers, and
// among maximizers the lowest price (most buyers) wins.

#include "bidleak/errors.hpp"
#include "bidleak/numeric.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace bidleak {

using Bid       = std::int64_t;
using BidVector = std::vector<Bid>;

namespace detail {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

template <std::integral T>
using WideProduct = std::conditional_t<(sizeof(T) < sizeof(std::int64_t)), std::int64_t, int128>;

template <std::integral T>
void require_valid_bids(std::span<const T> bids)
{
  if (bids.empty())
    throw DomainError("auction needs at least one bid");
  for (T b : bids)
    if (b < 1)
      throw DomainError("bids must be >= 1, got " + std::to_string(b));
}

template <std::integral T>
void require_bid_bound(std::span<const T> bids, T m)
{
  for (T b : bids)
    if (b > m)
      throw DomainError("bid " + std::to_string(b) + " exceeds domain bound " + std::to_string(m));
}

/// Pricing kernel without validation. `scratch` must hold bids.size()
/// elements; its contents are overwritten.
template <std::integral T>
T price_unchecked(std::span<const T> bids, std::span<T> scratch)
{
  auto sorted = scratch.first(bids.size());
  if (bids.size() <= 16) {
    // insertion sort, descending
    for (std::size_t i = 0; i < bids.size(); ++i) {
      const T v     = bids[i];
      std::size_t j = i;
      for (; j > 0 && sorted[j - 1] < v; --j)
        sorted[j] = sorted[j - 1];
      sorted[j] = v;
    }
  } else {
    std::copy(bids.begin(), bids.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end(), std::greater<T>{});
  }

  using Wide = WideProduct<T>;
  std::size_t best_k = 0;
  Wide best          = static_cast<Wide>(sorted[0]);
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    Wide product = static_cast<Wide>(k + 1) * static_cast<Wide>(sorted[k]);
    if (product >= best) {  // ties go to the larger k
      best   = product;
      best_k = k;
    }
  }
  return sorted[best_k];
}

}  // namespace detail

/// Optimal sales price for an arbitrary number of bidders.
template <std::integral T>
T auction_price(std::span<const T> bids)
{
  detail::require_valid_bids(bids);
  std::vector<T> scratch(bids.size());
  return detail::price_unchecked(bids, std::span<T>(scratch));
}

template <std::integral T>
T auction_price(std::span<const T> bids, T m)
{
  detail::require_valid_bids(bids);
  detail::require_bid_bound(bids, m);
  std::vector<T> scratch(bids.size());
  return detail::price_unchecked(bids, std::span<T>(scratch));
}

inline Bid auction_price(const BidVector& bids)
{
  return auction_price(std::span<const Bid>(bids));
}

inline Bid auction_price(std::initializer_list<Bid> bids)
{
  return auction_price(std::span<const Bid>(bids.begin(), bids.size()));
}

/// Two-party specialization written as a decision tree.
template <std::integral T>
T auction_price_2(T x, T y)
{
  const T pair[] = {x, y};
  detail::require_valid_bids(std::span<const T>(pair));
  using Wide = detail::WideProduct<T>;
  const Wide wx = x, wy = y;
  if (x > y)
    return wx > 2 * wy ? x : y;
  return wy > 2 * wx ? y : x;
}

/// Three-party specialization: after sorting, the price is whichever of
/// max, 2*mid, 3*min is largest, ties resolved toward the lower bid.
template <std::integral T>
T auction_price_3(T x, T y, T z)
{
  T s[] = {x, y, z};
  detail::require_valid_bids(std::span<const T>(s));
  if (s[0] < s[1]) std::swap(s[0], s[1]);
  if (s[1] < s[2]) std::swap(s[1], s[2]);
  if (s[0] < s[1]) std::swap(s[0], s[1]);

  using Wide = detail::WideProduct<T>;
  const Wide hi = s[0], mid = s[1], lo = s[2];
  if (hi > 2 * mid && hi > 3 * lo)
    return s[0];
  if (2 * mid > 3 * lo)
    return s[1];
  return s[2];
}

/// Price together with who buys and what the seller earns.
struct Sale
{
  Bid price = 0;
  std::vector<std::size_t> buyers;  // zero-based indices into the bid vector
  BigInt benefit;
};

inline Sale run_auction(std::span<const Bid> bids)
{
  Sale sale;
  sale.price = auction_price(bids);
  for (std::size_t i = 0; i < bids.size(); ++i)
    if (bids[i] >= sale.price)
      sale.buyers.push_back(i);
  sale.benefit = BigInt(sale.price) * sale.buyers.size();
  return sale;
}

}  // namespace bidleak
