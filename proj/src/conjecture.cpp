#include "bidleak/conjecture.hpp"

#include "bidleak/closed_form_two.hpp"
#include "bidleak/fast_three.hpp"
#include "bidleak/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bidleak {

CountSeries generate_series(int parties, Bid max_m, const SeriesOptions& options)
{
  if (max_m < 1)
    throw DomainError("series length max_m must be >= 1, got " + std::to_string(max_m));
  const Engine engine = resolve_engine(options.engine, parties);

  if (engine == Engine::Oracle) {
    BigInt work = 0;
    for (Bid m = 1; m <= max_m; ++m)
      work += ipow(BigInt(m), static_cast<unsigned>(parties));
    if (work > options.enumeration.budget)
      throw ResourceError("series needs " + to_string(work) + " tuple evaluations, above the budget of " +
                          std::to_string(options.enumeration.budget));
  }

  CountSeries series;
  series.parties = parties;
  series.points.reserve(static_cast<std::size_t>(max_m));
  for (Bid m = 1; m <= max_m; ++m) {
    SeriesPoint p;
    p.m      = m;
    p.engine = engine;
    switch (engine) {
      case Engine::Closed2: p.count = h2_closed_form(m).fixpoint_pairs; break;
      case Engine::Fast3: p.count = c3_fast(m, options.enumeration.threads); break;
      default: p.count = count_fixpoint_tuples(parties, m, options.enumeration); break;
    }
    if (engine != Engine::Oracle && m <= options.spot_check_max_m) {
      const BigInt reference = count_fixpoint_tuples(parties, m, options.enumeration);
      if (reference != p.count)
        throw std::logic_error("engine " + std::string(to_string(engine)) + " disagrees with enumeration at m=" +
                               std::to_string(m) + ": " + to_string(p.count) + " vs " + to_string(reference));
    }
    series.points.push_back(std::move(p));
  }
  return series;
}

CountSeries truncate_series(const CountSeries& series, std::size_t length)
{
  CountSeries out;
  out.parties = series.parties;
  const auto keep = std::min(length, series.points.size());
  out.points.assign(series.points.begin(), series.points.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

namespace {

PolyFit fit_points(std::span<const SeriesPoint> points, int degree, const FitOptions& options)
{
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& p : points) {
    xs.push_back(static_cast<double>(p.m));
    ys.push_back(p.count.convert_to<double>());
  }
  return polyfit_least_squares<double>(xs, ys, degree, options);
}

}  // namespace

PolyFit polyfit_least_squares(const CountSeries& series, int degree, const FitOptions& options)
{
  return fit_points(series.points, degree, options);
}

std::optional<double> published_leading_coefficient(int parties)
{
  switch (parties) {
    case 2: return 0.5;
    case 3: return 0.3334;
    case 4: return 0.2499;
    case 5: return 0.1995;
    default: return std::nullopt;
  }
}

ConjectureRow conjecture_row(const CountSeries& series, const FitOptions& options)
{
  ConjectureRow row;
  row.parties            = series.parties;
  row.max_m              = series.max_m();
  row.fit                = polyfit_least_squares(series, series.parties, options);
  row.fitted_leading     = row.fit.leading_coefficient;
  row.conjectured        = 1.0 / series.parties;
  row.deviation          = std::abs(row.fitted_leading - row.conjectured);
  row.implied_limit_bits = row.fitted_leading > 0 ? -std::log2(row.fitted_leading)
                                                  : std::numeric_limits<double>::quiet_NaN();
  row.conjectured_limit  = std::log2(static_cast<double>(series.parties));
  row.published_leading  = published_leading_coefficient(series.parties);
  return row;
}

ConjectureRow conjecture_report(int parties, Bid max_m, const SeriesOptions& options)
{
  return conjecture_row(generate_series(parties, max_m, options));
}

double subseries_spread(const CountSeries& series, int degree, std::size_t window, const FitOptions& options)
{
  if (window > series.points.size())
    throw DomainError("window longer than the series");
  const double full = polyfit_least_squares(series, degree, options).leading_coefficient;
  const std::span<const SeriesPoint> all(series.points);
  double spread = 0.0;
  for (std::size_t start = 0; start + window <= all.size(); ++start) {
    const double sub = fit_points(all.subspan(start, window), degree, options).leading_coefficient;
    spread           = std::max(spread, std::abs(sub - full));
  }
  return spread;
}

}  // namespace bidleak
