#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace bidleak {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default ceiling on tuple evaluations performed by exhaustive engines.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000'000ULL;

/// Environment variable consulted for the default budget.
inline constexpr const char* kBudgetEnvVar = "BIDLEAK_BUDGET";

/// Budget from the environment, or kDefaultEnumerationBudget when unset.
/// Throws DomainError if the variable is set but not a positive integer.
std::uint64_t default_enumeration_budget();

BigInt ipow(const BigInt& base, unsigned exponent);

/// -log2(v) for a positive rational, evaluated in 50-digit binary floating
/// point before rounding to double, so results do not depend on how the
/// rational was produced.
double neg_log2(const Rational& v);

/// log2(v) with the same precision guarantees as neg_log2.
double log2_exact(const Rational& v);

std::string to_string(const BigInt& v);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
/// is visited exactly once; callers write into per-index slots and reduce
/// afterwards, which keeps results independent of the worker count.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

/// Worker count to use when the caller passes 0.
unsigned hardware_threads();

}  // namespace bidleak
