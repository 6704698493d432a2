#include "bidleak/report.hpp"

#include "bidleak/closed_form_two.hpp"
#include "bidleak/errors.hpp"
#include "bidleak/fast_three.hpp"
#include "bidleak/oracle.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace bidleak {

namespace {

std::string sig6(double v)
{
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string rational_text(const Rational& r)
{
  return to_string(boost::multiprecision::numerator(r)) + "/" + to_string(boost::multiprecision::denominator(r));
}

Json breakdown_json(const CaseBreakdown& b)
{
  Json j;
  j["x"]  = b.x;
  j["s1"] = b.s1;
  j["s2"] = b.s2;
  j["s3"] = b.s3;
  j["s4"] = b.s4;
  j["c1"] = b.c1;
  j["c2"] = b.c2;
  j["c3"] = b.c3;
  return j;
}

std::string breakdown_text(const CaseBreakdown& b)
{
  std::ostringstream os;
  os << "S1=" << b.s1 << " S2=" << b.s2 << " S3=" << b.s3 << " S4=" << b.s4 << " (c1=" << b.c1 << " c2=" << b.c2
     << " c3=" << b.c3 << ")";
  return os.str();
}

}  // namespace

OutputFormat parse_format(std::string_view text)
{
  if (text == "human") return OutputFormat::Human;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw DomainError("unknown format '" + std::string(text) + "' (expected human, csv or json)");
}

Json big_to_json(const BigInt& v)
{
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return Json(v.convert_to<std::uint64_t>());
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

BigInt big_from_json(const Json& j)
{
  if (j.is_string())
    return BigInt(j.get<std::string>());
  if (j.is_number_unsigned())
    return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer())
    return BigInt(j.get<std::int64_t>());
  throw DomainError("expected an exact integer, got " + j.dump());
}

// ---------------------------------------------------------------------------
// leakage reports

Json to_json(const LeakageReport& r)
{
  Json j;
  j["n"]      = r.parties;
  j["m"]      = r.m;
  j["engine"] = std::string(to_string(r.engine));
  j["vulnerability"] = {{"num", big_to_json(boost::multiprecision::numerator(r.vulnerability))},
                        {"den", big_to_json(boost::multiprecision::denominator(r.vulnerability))}};
  j["entropy_bits"] = r.posterior_bits;
  j["prior_bits"]   = r.prior_bits;
  if (auto limit = r.limit_bits()) {
    j["limit_bits"]   = *limit;
    j["gap_to_limit"] = *r.gap_to_limit();
  }
  return j;
}

std::string format_human(const LeakageReport& r)
{
  std::ostringstream os;
  os << "n              " << r.parties << '\n'
     << "m              " << r.m << '\n'
     << "engine         " << to_string(r.engine) << '\n'
     << "vulnerability  " << rational_text(r.vulnerability) << " (" << sig6(r.vulnerability.convert_to<double>())
     << ")\n"
     << "entropy_bits   " << sig6(r.posterior_bits) << '\n'
     << "prior_bits     " << sig6(r.prior_bits) << '\n';
  if (auto limit = r.limit_bits()) {
    os << "limit_bits     " << sig6(*limit) << '\n' << "gap_to_limit   " << sig6(*r.gap_to_limit()) << '\n';
  }
  return os.str();
}

std::string format_csv(const LeakageReport& r)
{
  std::ostringstream os;
  os << std::setprecision(17);
  os << "n,m,engine,vulnerability_num,vulnerability_den,entropy_bits,prior_bits,limit_bits,gap_to_limit\n";
  os << r.parties << ',' << r.m << ',' << to_string(r.engine) << ','
     << to_string(boost::multiprecision::numerator(r.vulnerability)) << ','
     << to_string(boost::multiprecision::denominator(r.vulnerability)) << ',' << r.posterior_bits << ','
     << r.prior_bits << ',';
  if (auto limit = r.limit_bits())
    os << *limit << ',' << *r.gap_to_limit();
  else
    os << ',';
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// single auctions

Json to_json(const Sale& sale, std::span<const Bid> bids)
{
  Json j;
  j["bids"]  = std::vector<Bid>(bids.begin(), bids.end());
  j["price"] = sale.price;
  Json buyers = Json::array();
  for (auto i : sale.buyers)
    buyers.push_back(i + 1);
  j["buyers"]  = buyers;
  j["benefit"] = big_to_json(sale.benefit);
  return j;
}

std::string format_human(const Sale& sale)
{
  std::ostringstream os;
  os << "price    " << sale.price << '\n' << "buyers   ";
  for (std::size_t i = 0; i < sale.buyers.size(); ++i)
    os << (i ? "," : "") << sale.buyers[i] + 1;
  os << '\n' << "benefit  " << sale.benefit << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// two-party table

OutputTable make_output_table(Bid m)
{
  if (m < 1)
    throw DomainError("table size m must be >= 1, got " + std::to_string(m));
  OutputTable table(m, m);
  for (Bid x = 1; x <= m; ++x)
    for (Bid y = 1; y <= m; ++y)
      table(x - 1, y - 1) = auction_price_2(x, y);
  return table;
}

std::string render_table_human(const OutputTable& table)
{
  const Bid m = table.rows();
  if (m > kMaxHumanTable)
    throw DomainError("table with m = " + std::to_string(m) + " is too large to render (limit " +
                      std::to_string(kMaxHumanTable) + "); use --format csv");
  const auto width = static_cast<int>(std::to_string(m).size()) + 1;
  std::ostringstream os;
  os << std::setw(width) << "x\\y" << " |";
  for (Bid y = 1; y <= m; ++y)
    os << std::setw(width) << y;
  os << '\n' << std::string(static_cast<std::size_t>(width) + 2 + static_cast<std::size_t>(width * m), '-') << '\n';
  for (Bid x = 1; x <= m; ++x) {
    os << std::setw(width) << x << " |";
    for (Bid y = 1; y <= m; ++y)
      os << std::setw(width) << table(x - 1, y - 1);
    os << '\n';
  }
  return os.str();
}

std::string render_table_csv(const OutputTable& table)
{
  const Bid m = table.rows();
  if (m > kMaxCsvTable)
    throw DomainError("table with m = " + std::to_string(m) + " exceeds the CSV limit of " +
                      std::to_string(kMaxCsvTable));
  std::ostringstream os;
  os << "x";
  for (Bid y = 1; y <= m; ++y)
    os << ',' << y;
  os << '\n';
  for (Bid x = 1; x <= m; ++x) {
    os << x;
    for (Bid y = 1; y <= m; ++y)
      os << ',' << table(x - 1, y - 1);
    os << '\n';
  }
  return os.str();
}

Json table_to_json(const OutputTable& table)
{
  const Bid m = table.rows();
  if (m > kMaxCsvTable)
    throw DomainError("table with m = " + std::to_string(m) + " exceeds the output limit of " +
                      std::to_string(kMaxCsvTable));
  Json rows = Json::array();
  for (Bid x = 1; x <= m; ++x) {
    Json row = Json::array();
    for (Bid y = 1; y <= m; ++y)
      row.push_back(table(x - 1, y - 1));
    rows.push_back(std::move(row));
  }
  Json j;
  j["m"]       = m;
  j["outputs"] = std::move(rows);
  return j;
}

// ---------------------------------------------------------------------------
// verification harness

std::size_t VerificationReport::match_count() const
{
  std::size_t n = 0;
  for (const auto& row : rows)
    n += row.matches() ? 1 : 0;
  return n;
}

VerificationReport verify_engines(int parties, Bid max_m, const EnumerationOptions& options)
{
  if (parties != 2 && parties != 3)
    throw DomainError("verify compares the two- and three-party engines; n must be 2 or 3, got " +
                      std::to_string(parties));
  if (max_m < 1)
    throw DomainError("max_m must be >= 1, got " + std::to_string(max_m));

  BigInt work = 0;
  for (Bid m = 1; m <= max_m; ++m)
    work += ipow(BigInt(m), static_cast<unsigned>(parties));
  if (work > options.budget)
    throw ResourceError("verification needs " + to_string(work) + " tuple evaluations, above the budget of " +
                        std::to_string(options.budget));

  VerificationReport report;
  report.parties = parties;
  report.engine  = parties == 2 ? Engine::Closed2 : Engine::Fast3;
  for (Bid m = 1; m <= max_m; ++m) {
    VerificationRow row;
    row.m         = m;
    row.reference = count_fixpoint_tuples(parties, m, options);
    if (parties == 2) {
      row.candidate = h2_closed_form(m).fixpoint_pairs;
    } else {
      row.candidate = c3_fast(m, options.threads);
      for (Bid x = 1; x <= m; ++x) {
        const auto fast  = case_breakdown<std::int64_t>(x, m);
        const auto brute = case_breakdown_bruteforce(x, m);
        if (!(fast == brute))
          row.case_mismatches.push_back({x, fast, brute});
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const VerificationReport& report)
{
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["m"]         = row.m;
    r["reference"] = big_to_json(row.reference);
    r["candidate"] = big_to_json(row.candidate);
    r["match"]     = row.matches();
    if (!row.case_mismatches.empty()) {
      Json cases = Json::array();
      for (const auto& c : row.case_mismatches)
        cases.push_back({{"x", c.x}, {"fast", breakdown_json(c.fast)}, {"brute", breakdown_json(c.brute)}});
      r["case_mismatches"] = std::move(cases);
    }
    rows.push_back(std::move(r));
  }
  Json j;
  j["n"]       = report.parties;
  j["engine"]  = std::string(to_string(report.engine));
  j["checked"] = report.rows.size();
  j["matches"] = report.match_count();
  j["rows"]    = std::move(rows);
  return j;
}

std::string format_human(const VerificationReport& report)
{
  std::ostringstream os;
  for (const auto& row : report.rows) {
    os << "m=" << row.m << "  enumeration=" << row.reference << "  " << to_string(report.engine) << '='
       << row.candidate << "  " << (row.matches() ? "ok" : "MISMATCH") << '\n';
    for (const auto& c : row.case_mismatches)
      os << "    x=" << c.x << "  fast " << breakdown_text(c.fast) << "  brute " << breakdown_text(c.brute) << '\n';
  }
  os << report.match_count() << '/' << report.rows.size() << " exact matches (n=" << report.parties << ", "
     << to_string(report.engine) << " vs enumeration)\n";
  return os.str();
}

std::string format_csv(const VerificationReport& report)
{
  std::ostringstream os;
  os << "m,reference,candidate,match,case_mismatches\n";
  for (const auto& row : report.rows)
    os << row.m << ',' << row.reference << ',' << row.candidate << ',' << (row.matches() ? 1 : 0) << ','
       << row.case_mismatches.size() << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// series and fits

std::string series_csv(const CountSeries& series)
{
  std::ostringstream os;
  os << "m,c_n\n";
  for (const auto& p : series.points)
    os << p.m << ',' << p.count << '\n';
  return os.str();
}

Json to_json(const PolyFit& fit, std::optional<double> published_leading)
{
  Json j;
  j["degree"]       = fit.degree;
  j["coefficients"] = fit.coefficients;
  j["leading"]      = fit.leading_coefficient;
  j["residual"]     = fit.residual_norm;
  j["condition"]    = fit.condition;
  if (published_leading)
    j["paper_leading"] = *published_leading;
  return j;
}

Json to_json(const ConjectureRow& row)
{
  Json j = to_json(row.fit, row.published_leading);
  j["n"]                      = row.parties;
  j["max_m"]                  = row.max_m;
  j["conjectured_leading"]    = row.conjectured;
  j["deviation"]              = row.deviation;
  j["implied_limit_bits"]     = row.implied_limit_bits;
  j["conjectured_limit_bits"] = row.conjectured_limit;
  return j;
}

std::string format_human(const ConjectureRow& row)
{
  std::ostringstream os;
  os << "n=" << row.parties << "  M=" << row.max_m << "  degree=" << row.fit.degree << '\n';
  os << "  P(m) =";
  for (std::size_t i = 0; i < row.fit.coefficients.size(); ++i) {
    const int power = row.fit.degree - static_cast<int>(i);
    os << ' ' << (i ? "+ " : "") << sig6(row.fit.coefficients[i]);
    if (power > 0)
      os << " m^" << power;
  }
  os << '\n'
     << "  leading " << sig6(row.fitted_leading) << "  vs 1/n " << sig6(row.conjectured) << "  deviation "
     << sig6(row.deviation) << '\n'
     << "  implied limit " << sig6(row.implied_limit_bits) << " bits  vs log2 n " << sig6(row.conjectured_limit)
     << " bits\n"
     << "  residual " << sig6(row.fit.residual_norm) << "  condition " << sig6(row.fit.condition) << '\n';
  if (row.published_leading)
    os << "  published leading " << *row.published_leading << '\n';
  return os.str();
}

}  // namespace bidleak
