#include "bidleak/closed_form_two.hpp"

#include "bidleak/errors.hpp"

#include <string>

namespace bidleak {

TwoPartyResult h2_closed_form(Bid m)
{
  if (m < 1)
    throw DomainError("domain bound m must be >= 1, got " + std::to_string(m));
  TwoPartyResult r;
  r.m              = m;
  const BigInt bm  = m;
  r.fixpoint_pairs = bm * (bm + 1) / 2;
  r.tuples         = bm * bm;
  r.vulnerability  = Rational(r.fixpoint_pairs, r.tuples);
  r.entropy_bits   = neg_log2(r.vulnerability);
  // 1 - H = log2((m+1)/m)
  r.gap_to_limit = log2_exact(Rational(bm + 1, bm));
  return r;
}

double two_party_limit()
{
  return 1.0;
}

}  // namespace bidleak
