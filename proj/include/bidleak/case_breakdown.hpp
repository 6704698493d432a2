#pragma once

#include <cstdint>

namespace bidleak {

/// Fixpoint pairs (y, z) for a fixed first bid x in a three-party auction,
/// split by where x falls in the sorted order:
///   s1: x > y and x > z
///   s2: y >= x > z
///   s3: z >= x > y
///   s4: x <= y and x <= z, itself split into
///       c1: both y, z <= 3x/2
///       c2: y <= 3x/2 < z
///       c3: z <= 3x/2 < y
template <class Int>
struct BasicCaseBreakdown
{
  Int x{};
  Int s1{}, s2{}, s3{}, s4{};
  Int c1{}, c2{}, c3{};

  Int total() const { return s1 + s2 + s3 + s4; }

  friend bool operator==(const BasicCaseBreakdown&, const BasicCaseBreakdown&) = default;
};

using CaseBreakdown = BasicCaseBreakdown<std::int64_t>;

}  // namespace bidleak
