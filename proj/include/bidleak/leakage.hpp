#pragma once

#include "bidleak/auction.hpp"
#include "bidleak/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace bidleak {

enum class Engine
{
  Oracle,    // exhaustive enumeration
  Closed2,   // two-party closed form
  Fast3,     // three-party linear-time lattice count
  Auto,      // cheapest exact engine for the party count
};

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view text);

/// Resolves Auto and checks that an explicit engine supports n parties.
Engine resolve_engine(Engine requested, int parties);

struct EnumerationOptions
{
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads     = 1;  // 0 = hardware concurrency
};

/// Posterior min-entropy of one bid given the published price, assuming all
/// bids uniform on [1, m]. Entropies are in bits.
struct LeakageReport
{
  int parties = 0;
  Bid m       = 0;
  Rational vulnerability;  // c_n(m) / m^n in lowest terms
  double posterior_bits = 0.0;
  double prior_bits     = 0.0;
  Engine engine         = Engine::Oracle;

  /// Known large-m limit of the posterior entropy (1 bit for two parties,
  /// log2 3 for three); empty for other party counts.
  std::optional<double> limit_bits() const;
  std::optional<double> gap_to_limit() const;
};

LeakageReport make_report(int parties, Bid m, const Rational& vulnerability, Engine engine);

/// Dispatches to the requested engine. Auto selects the closed form for two
/// parties, the linear-time counter for three, and enumeration otherwise.
LeakageReport compute_leakage(int parties, Bid m, Engine engine, const EnumerationOptions& options = {});

}  // namespace bidleak
