#pragma once

// Serialization of reports (human text, CSV, JSON), the two-party price
// table, and the engine-vs-enumeration verification harness.

#include "bidleak/auction.hpp"
#include "bidleak/case_breakdown.hpp"
#include "bidleak/conjecture.hpp"
#include "bidleak/leakage.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <string>
#include <vector>

namespace bidleak {

using Json = nlohmann::ordered_json;

enum class OutputFormat
{
  Human,
  Csv,
  Json,
};

OutputFormat parse_format(std::string_view text);

/// Exact integers go out as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that, so no reader ever rounds them through a
/// double.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const LeakageReport& report);
std::string format_human(const LeakageReport& report);
std::string format_csv(const LeakageReport& report);

Json to_json(const Sale& sale, std::span<const Bid> bids);
std::string format_human(const Sale& sale);

/// table(x - 1, y - 1) = price for bids (x, y).
using OutputTable = Eigen::Matrix<Bid, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr Bid kMaxHumanTable = 200;
inline constexpr Bid kMaxCsvTable   = 5000;

OutputTable make_output_table(Bid m);
std::string render_table_human(const OutputTable& table);
std::string render_table_csv(const OutputTable& table);
Json table_to_json(const OutputTable& table);

struct CaseMismatch
{
  Bid x = 0;
  CaseBreakdown fast;
  CaseBreakdown brute;
};

struct VerificationRow
{
  Bid m = 0;
  BigInt reference;  // enumeration
  BigInt candidate;  // closed form or fast count
  std::vector<CaseMismatch> case_mismatches;

  bool matches() const { return reference == candidate && case_mismatches.empty(); }
};

struct VerificationReport
{
  int parties   = 0;
  Engine engine = Engine::Oracle;
  std::vector<VerificationRow> rows;

  std::size_t match_count() const;
  bool all_match() const { return match_count() == rows.size(); }
};

/// Compares the closed form (n = 2) or the linear-time counter (n = 3)
/// against enumeration for every m in [1, max_m]. For three parties the
/// per-x case counts are also checked against a brute-force classification.
VerificationReport verify_engines(int parties, Bid max_m, const EnumerationOptions& options = {});

Json to_json(const VerificationReport& report);
std::string format_human(const VerificationReport& report);
std::string format_csv(const VerificationReport& report);

/// Header `m,c_n`, one row per point, LF line endings.
std::string series_csv(const CountSeries& series);
Json to_json(const PolyFit& fit, std::optional<double> published_leading = std::nullopt);
Json to_json(const ConjectureRow& row);
std::string format_human(const ConjectureRow& row);

}  // namespace bidleak
