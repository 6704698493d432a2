#include "bidleak/oracle.hpp"

#include "bidleak/errors.hpp"

#include <string>

namespace bidleak {

namespace {

// Fills counts(:, x - 1) by walking all m^(n-1) spectator tuples with the
// targeted bid pinned to x.
void enumerate_column(ConditionalChannel& channel, Bid x)
{
  const auto n      = static_cast<std::size_t>(channel.parties);
  const auto target = static_cast<std::size_t>(channel.target_index - 1);
  const Bid m       = channel.m;

  std::vector<Bid> tuple(n, 1);
  std::vector<Bid> scratch(n);
  std::vector<std::size_t> spectators;
  for (std::size_t i = 0; i < n; ++i)
    if (i != target)
      spectators.push_back(i);
  tuple[target] = x;
  auto column   = channel.counts.col(x - 1);

  while (true) {
    const Bid price = detail::price_unchecked(std::span<const Bid>(tuple), std::span<Bid>(scratch));
    ++column(price - 1);

    // odometer over the spectator positions
    std::size_t k = spectators.size();
    for (; k > 0; --k) {
      Bid& digit = tuple[spectators[k - 1]];
      if (digit < m) {
        ++digit;
        break;
      }
      digit = 1;
    }
    if (k == 0)
      return;
  }
}

}  // namespace

std::uint64_t ConditionalChannel::spectator_tuples() const
{
  std::uint64_t total = 1;
  for (int i = 1; i < parties; ++i)
    total *= static_cast<std::uint64_t>(m);
  return total;
}

void check_enumeration(int parties, Bid m, std::uint64_t budget)
{
  if (parties < 1)
    throw DomainError("party count must be >= 1, got " + std::to_string(parties));
  if (m < 1)
    throw DomainError("domain bound m must be >= 1, got " + std::to_string(m));
  const BigInt tuples = ipow(BigInt(m), static_cast<unsigned>(parties));
  if (tuples > budget)
    throw ResourceError("exhaustive enumeration needs m^n = " + to_string(tuples) +
                        " tuple evaluations, above the budget of " + std::to_string(budget) +
                        "; use a closed-form engine or raise --budget / " + kBudgetEnvVar);
}

ConditionalChannel build_channel(int parties, Bid m, int target_index, const EnumerationOptions& options)
{
  check_enumeration(parties, m, options.budget);
  if (target_index < 1 || target_index > parties)
    throw DomainError("target index must lie in [1, " + std::to_string(parties) + "], got " +
                      std::to_string(target_index));

  ConditionalChannel channel;
  channel.parties      = parties;
  channel.m            = m;
  channel.target_index = target_index;
  channel.counts       = ConditionalChannel::CountMatrix::Zero(m, m);

  // Each targeted value owns one column, so workers never share a slot.
  parallel_for(static_cast<std::size_t>(m), options.threads,
               [&](std::size_t i) { enumerate_column(channel, static_cast<Bid>(i) + 1); });
  return channel;
}

BigInt count_fixpoint_tuples(const ConditionalChannel& channel)
{
  BigInt total = 0;
  for (Bid o = 1; o <= channel.m; ++o)
    total += channel.count(o, o);
  return total;
}

BigInt count_fixpoint_tuples(int parties, Bid m, const EnumerationOptions& options)
{
  return count_fixpoint_tuples(build_channel(parties, m, 1, options));
}

Rational vulnerability_from_channel(const ConditionalChannel& channel)
{
  BigInt sum_of_max = 0;
  for (Bid o = 1; o <= channel.m; ++o)
    sum_of_max += channel.counts.row(o - 1).maxCoeff();
  // (1/m) * sum_o max_x counts(o, x) / m^(n-1)
  return Rational(sum_of_max, ipow(BigInt(channel.m), static_cast<unsigned>(channel.parties)));
}

Rational vulnerability_oracle(int parties, Bid m, const EnumerationOptions& options)
{
  return vulnerability_from_channel(build_channel(parties, m, 1, options));
}

LeakageReport min_entropy_oracle(int parties, Bid m, const EnumerationOptions& options)
{
  return make_report(parties, m, vulnerability_oracle(parties, m, options), Engine::Oracle);
}

GuessStrategy best_guess_strategy(const ConditionalChannel& channel)
{
  GuessStrategy strategy;
  strategy.parties = channel.parties;
  strategy.m       = channel.m;
  strategy.guesses.reserve(static_cast<std::size_t>(channel.m));
  for (Bid o = 1; o <= channel.m; ++o) {
    Guess g;
    g.output = o;
    g.hits   = channel.counts.row(o - 1).maxCoeff();
    for (Bid x = 1; x <= channel.m; ++x)
      if (channel.count(o, x) == g.hits)
        g.ties.push_back(x);
    g.best = g.ties.front();
    strategy.guesses.push_back(std::move(g));
  }
  return strategy;
}

GuessStrategy best_guess_strategy(int parties, Bid m, const EnumerationOptions& options)
{
  return best_guess_strategy(build_channel(parties, m, 1, options));
}

Rational expected_success(const GuessStrategy& strategy, const ConditionalChannel& channel)
{
  BigInt hits = 0;
  for (const Guess& g : strategy.guesses)
    hits += channel.count(g.output, g.best);
  return Rational(hits, ipow(BigInt(channel.m), static_cast<unsigned>(channel.parties)));
}

CaseBreakdown case_breakdown_bruteforce(Bid x, Bid m)
{
  if (m < 1 || x < 1 || x > m)
    throw DomainError("need 1 <= x <= m, got x=" + std::to_string(x) + ", m=" + std::to_string(m));
  CaseBreakdown b;
  b.x = x;
  for (Bid y = 1; y <= m; ++y) {
    for (Bid z = 1; z <= m; ++z) {
      if (auction_price({x, y, z}) != x)
        continue;
      if (x > y && x > z) {
        ++b.s1;
      } else if (y >= x && x > z) {
        ++b.s2;
      } else if (z >= x && x > y) {
        ++b.s3;
      } else {
        ++b.s4;
        const bool y_low = 2 * y <= 3 * x;
        const bool z_low = 2 * z <= 3 * x;
        if (y_low && z_low)
          ++b.c1;
        else if (y_low)
          ++b.c2;
        else if (z_low)
          ++b.c3;
      }
    }
  }
  return b;
}

}  // namespace bidleak
