#pragma once

// Fixpoint-count series c_n(1..M) and polynomial least-squares fits of them.
// If c_n(m) = a_n m^n + O(m^(n-1)), the posterior entropy tends to -log2 a_n;
// the fitted leading coefficient is compared against 1/n.

#include "bidleak/leakage.hpp"
#include "bidleak/numeric.hpp"
#include "bidleak/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bidleak {

struct SeriesPoint
{
  Bid m = 0;
  BigInt count;
  Engine engine = Engine::Oracle;
};

struct CountSeries
{
  int parties = 0;
  std::vector<SeriesPoint> points;  // m = 1, 2, ..., max_m

  Bid max_m() const { return points.empty() ? 0 : points.back().m; }
};

struct SeriesOptions
{
  Engine engine = Engine::Auto;
  EnumerationOptions enumeration;
  /// Points with m at or below this are recomputed by enumeration and must
  /// match when a faster engine produced them.
  Bid spot_check_max_m = 12;
};

CountSeries generate_series(int parties, Bid max_m, const SeriesOptions& options = {});

/// The first `length` points of a series (or all, if shorter).
CountSeries truncate_series(const CountSeries& series, std::size_t length);

template <class Scalar>
struct BasicPolyFit
{
  int degree = 0;
  std::vector<Scalar> coefficients;  // highest degree first
  Scalar residual_norm{};            // ||P(m) - c(m)||_2
  Scalar leading_coefficient{};
  Scalar condition{};                // 2-norm condition of the design matrix that was solved

  Scalar evaluate(Scalar t) const
  {
    Scalar acc{};
    for (const Scalar& c : coefficients)
      acc = acc * t + c;
    return acc;
  }
};

using PolyFit = BasicPolyFit<double>;

struct FitOptions
{
  /// Regress on m / max(m) and map coefficients back; plain monomials in m
  /// are badly conditioned at degree 5 on [1, 30].
  bool rescale = true;
  /// Condition numbers above this raise NumericError.
  double max_condition = 1e13;
};

/// Ordinary least squares fit of a polynomial of the given degree through
/// (xs[i], ys[i]).
template <class Scalar>
BasicPolyFit<Scalar> polyfit_least_squares(std::span<const Scalar> xs, std::span<const Scalar> ys, int degree,
                                           const FitOptions& options = {})
{
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  if (degree < 0)
    throw DomainError("polynomial degree must be >= 0");
  if (xs.size() != ys.size())
    throw DomainError("x and y sample counts differ");
  const auto rows = static_cast<Eigen::Index>(xs.size());
  const auto cols = static_cast<Eigen::Index>(degree) + 1;
  if (rows < cols)
    throw DomainError("least squares needs at least degree + 1 = " + std::to_string(cols) + " points, got " +
                      std::to_string(rows));

  const Eigen::Map<const Vector> x(xs.data(), rows);
  const Eigen::Map<const Vector> y(ys.data(), rows);

  Scalar scale(1);
  if (options.rescale) {
    scale = x.cwiseAbs().maxCoeff();
    if (scale == Scalar(0))
      scale = Scalar(1);
  }
  const Vector t = x / scale;

  // Columns t^degree, ..., t^0.
  Matrix design(rows, cols);
  design.col(cols - 1).setOnes();
  for (Eigen::Index j = cols - 2; j >= 0; --j)
    design.col(j) = design.col(j + 1).cwiseProduct(t);

  Eigen::JacobiSVD<Matrix> svd(design);
  const auto& sv        = svd.singularValues();
  const Scalar smallest = sv(sv.size() - 1);
  const Scalar condition =
      smallest > Scalar(0) ? Scalar(sv(0) / smallest) : std::numeric_limits<Scalar>::infinity();
  if (!(condition <= Scalar(options.max_condition)))
    throw NumericError("least squares system is numerically singular (condition " + std::to_string(double(condition)) +
                           ")",
                       double(condition));

  const Vector scaled = design.colPivHouseholderQr().solve(y);

  BasicPolyFit<Scalar> fit;
  fit.degree        = degree;
  fit.condition     = condition;
  fit.residual_norm = (design * scaled - y).norm();
  fit.coefficients.resize(static_cast<std::size_t>(cols));
  for (Eigen::Index j = 0; j < cols; ++j) {
    const int power = degree - static_cast<int>(j);
    fit.coefficients[static_cast<std::size_t>(j)] = scaled(j) / std::pow(scale, power);
  }
  fit.leading_coefficient = fit.coefficients.front();
  return fit;
}

PolyFit polyfit_least_squares(const CountSeries& series, int degree, const FitOptions& options = {});

/// Leading coefficients printed for the degree-n fits on c_n(1..30),
/// four significant figures. Empty outside n = 2..5.
std::optional<double> published_leading_coefficient(int parties);

struct ConjectureRow
{
  int parties = 0;
  Bid max_m   = 0;
  PolyFit fit;
  double fitted_leading     = 0.0;
  double conjectured        = 0.0;  // 1/n
  double deviation          = 0.0;  // |fitted - 1/n|
  double implied_limit_bits = 0.0;  // -log2(fitted)
  double conjectured_limit  = 0.0;  // log2 n
  std::optional<double> published_leading;
};

ConjectureRow conjecture_row(const CountSeries& series, const FitOptions& options = {});
ConjectureRow conjecture_report(int parties, Bid max_m, const SeriesOptions& options = {});

/// Largest change of the leading coefficient when refitting on each
/// contiguous window of `window` points.
double subseries_spread(const CountSeries& series, int degree, std::size_t window, const FitOptions& options = {});

}  // namespace bidleak
