#include "bidleak/leakage.hpp"

#include "bidleak/closed_form_two.hpp"
#include "bidleak/errors.hpp"
#include "bidleak/fast_three.hpp"
#include "bidleak/oracle.hpp"

#include <cmath>

namespace bidleak {

std::string_view to_string(Engine engine)
{
  switch (engine) {
    case Engine::Oracle: return "oracle";
    case Engine::Closed2: return "closed2";
    case Engine::Fast3: return "fast3";
    case Engine::Auto: return "auto";
  }
  return "unknown";
}

Engine parse_engine(std::string_view text)
{
  if (text == "oracle") return Engine::Oracle;
  if (text == "closed2") return Engine::Closed2;
  if (text == "fast3") return Engine::Fast3;
  if (text == "auto") return Engine::Auto;
  throw DomainError("unknown engine '" + std::string(text) + "' (expected oracle, closed2, fast3 or auto)");
}

Engine resolve_engine(Engine requested, int parties)
{
  if (parties < 1)
    throw DomainError("party count must be >= 1, got " + std::to_string(parties));
  switch (requested) {
    case Engine::Auto:
      if (parties == 2) return Engine::Closed2;
      if (parties == 3) return Engine::Fast3;
      return Engine::Oracle;
    case Engine::Closed2:
      if (parties != 2)
        throw DomainError("engine closed2 requires n = 2, got n = " + std::to_string(parties));
      return requested;
    case Engine::Fast3:
      if (parties != 3)
        throw DomainError("engine fast3 requires n = 3, got n = " + std::to_string(parties));
      return requested;
    case Engine::Oracle:
      return requested;
  }
  return requested;
}

std::optional<double> LeakageReport::limit_bits() const
{
  if (parties == 2)
    return two_party_limit();
  if (parties == 3)
    return three_party_limit();
  return std::nullopt;
}

std::optional<double> LeakageReport::gap_to_limit() const
{
  auto limit = limit_bits();
  if (!limit)
    return std::nullopt;
  return *limit - posterior_bits;
}

LeakageReport make_report(int parties, Bid m, const Rational& vulnerability, Engine engine)
{
  LeakageReport r;
  r.parties        = parties;
  r.m              = m;
  r.vulnerability  = vulnerability;
  r.posterior_bits = neg_log2(vulnerability);
  r.prior_bits     = neg_log2(Rational(1, m));
  r.engine         = engine;
  return r;
}

LeakageReport compute_leakage(int parties, Bid m, Engine engine, const EnumerationOptions& options)
{
  if (m < 1)
    throw DomainError("domain bound m must be >= 1, got " + std::to_string(m));
  switch (resolve_engine(engine, parties)) {
    case Engine::Closed2: {
      auto r = h2_closed_form(m);
      return make_report(parties, m, r.vulnerability, Engine::Closed2);
    }
    case Engine::Fast3: {
      auto r = h3_fast(m, options.threads);
      return make_report(parties, m, r.vulnerability, Engine::Fast3);
    }
    default:
      return min_entropy_oracle(parties, m, options);
  }
}

}  // namespace bidleak
