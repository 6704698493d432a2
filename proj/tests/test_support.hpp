#pragma once

#include "bidleak/auction.hpp"

#include <cstdint>
#include <vector>

namespace bidleak::testing {

// Calls fn(tuple) for every tuple in [1, m]^n, last position fastest.
template <class Fn>
void for_each_tuple(int n, Bid m, Fn&& fn)
{
  std::vector<Bid> t(static_cast<std::size_t>(n), 1);
  while (true) {
    fn(static_cast<const std::vector<Bid>&>(t));
    int pos = n - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == m)
      t[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0)
      return;
    ++t[static_cast<std::size_t>(pos)];
  }
}

// Seller's view, no sorting: among the submitted bids pick the price with
// the highest revenue, preferring the lower price on ties.
inline Bid seller_optimal_price(const std::vector<Bid>& bids)
{
  Bid best_price = 0;
  std::int64_t best_revenue = -1;
  for (Bid p : bids) {
    std::int64_t buyers = 0;
    for (Bid b : bids)
      buyers += b >= p ? 1 : 0;
    const std::int64_t revenue = p * buyers;
    if (revenue > best_revenue || (revenue == best_revenue && p < best_price)) {
      best_revenue = revenue;
      best_price   = p;
    }
  }
  return best_price;
}

}  // namespace bidleak::testing
