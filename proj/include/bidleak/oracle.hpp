#pragma once

// Exhaustive enumeration of every bid tuple in [1, m]^n. Slow, exact, and
// the reference that every faster engine is tested against.

#include "bidleak/auction.hpp"
#include "bidleak/case_breakdown.hpp"
#include "bidleak/leakage.hpp"
#include "bidleak/numeric.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace bidleak {

/// counts(o - 1, x - 1) is the number of spectator tuples for which the
/// targeted bid x yields price o. Each column sums to m^(n-1).
struct ConditionalChannel
{
  using CountMatrix = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;

  int parties      = 0;
  Bid m            = 0;
  int target_index = 1;  // one-based position of the targeted bid
  CountMatrix counts;

  std::uint64_t count(Bid output, Bid input) const { return counts(output - 1, input - 1); }
  std::uint64_t spectator_tuples() const;
};

struct Guess
{
  Bid output = 0;
  Bid best   = 0;             // smallest maximizer
  std::vector<Bid> ties;      // every maximizer, ascending
  std::uint64_t hits = 0;     // counts(output, best)
};

struct GuessStrategy
{
  int parties = 0;
  Bid m       = 0;
  std::vector<Guess> guesses;  // one per output value 1..m

  Bid guess_for(Bid output) const { return guesses.at(static_cast<std::size_t>(output - 1)).best; }
};

/// Throws DomainError for n < 1 or m < 1, ResourceError when m^n exceeds
/// the budget.
void check_enumeration(int parties, Bid m, std::uint64_t budget);

ConditionalChannel build_channel(int parties, Bid m, int target_index = 1,
                                 const EnumerationOptions& options = {});

/// c_n(m): tuples whose price equals the first bid.
BigInt count_fixpoint_tuples(int parties, Bid m, const EnumerationOptions& options = {});
BigInt count_fixpoint_tuples(const ConditionalChannel& channel);

/// Vulnerability evaluated from its definition: (1/m) sum_o max_x p(o | x).
Rational vulnerability_from_channel(const ConditionalChannel& channel);

Rational vulnerability_oracle(int parties, Bid m, const EnumerationOptions& options = {});
LeakageReport min_entropy_oracle(int parties, Bid m, const EnumerationOptions& options = {});

GuessStrategy best_guess_strategy(const ConditionalChannel& channel);
GuessStrategy best_guess_strategy(int parties, Bid m, const EnumerationOptions& options = {});

/// Probability that guessing with `strategy` recovers the targeted bid.
Rational expected_success(const GuessStrategy& strategy, const ConditionalChannel& channel);

/// Three-party fixpoint pairs for first bid x, classified by brute force.
CaseBreakdown case_breakdown_bruteforce(Bid x, Bid m);

}  // namespace bidleak
