#include "bidleak/numeric.hpp"

#include "bidleak/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bidleak {

namespace {
using Float50 = boost::multiprecision::cpp_bin_float_50;
}

std::uint64_t default_enumeration_budget()
{
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr || *raw == '\0')
    return kDefaultEnumerationBudget;
  std::string text(raw);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
    throw DomainError(std::string(kBudgetEnvVar) + " must be a positive integer, got '" + text + "'");
  return value;
}

BigInt ipow(const BigInt& base, unsigned exponent)
{
  return boost::multiprecision::pow(base, exponent);
}

double log2_exact(const Rational& v)
{
  if (v <= 0)
    throw DomainError("log2 of a non-positive rational");
  Float50 num(boost::multiprecision::numerator(v));
  Float50 den(boost::multiprecision::denominator(v));
  Float50 result = (log(num) - log(den)) / log(Float50(2));
  return result.convert_to<double>();
}

double neg_log2(const Rational& v)
{
  double r = -log2_exact(v);
  // -0.0 would leak into serialized output for v == 1.
  return r == 0.0 ? 0.0 : r;
}

std::string to_string(const BigInt& v)
{
  return v.str();
}

unsigned hardware_threads()
{
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body)
{
  if (threads == 0)
    threads = hardware_threads();
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

}  // namespace bidleak
