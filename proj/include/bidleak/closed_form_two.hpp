#pragma once

// Two-party leakage in constant time. The fixpoint pairs {(x, y) : f(x, y) = x}
// number m(m+1)/2, so the vulnerability is (m+1)/(2m).

#include "bidleak/auction.hpp"
#include "bidleak/numeric.hpp"

namespace bidleak {

struct TwoPartyResult
{
  Bid m = 0;
  BigInt fixpoint_pairs;        // m(m+1)/2
  BigInt tuples;                // m^2
  Rational vulnerability;       // (m+1)/(2m), reduced
  double entropy_bits  = 0.0;
  double gap_to_limit  = 0.0;   // 1 - entropy_bits, computed without cancellation
};

TwoPartyResult h2_closed_form(Bid m);

/// Limit of the two-party posterior entropy as m grows: one bit.
double two_party_limit();

}  // namespace bidleak
