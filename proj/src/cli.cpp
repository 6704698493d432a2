#include "bidleak/cli.hpp"

#include "bidleak/conjecture.hpp"
#include "bidleak/errors.hpp"
#include "bidleak/leakage.hpp"
#include "bidleak/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bidleak {

namespace {

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct RunConfig
{
  int parties         = 0;
  Bid m               = 0;
  Bid max_m           = 30;
  int degree          = -1;  // defaults to the party count
  std::string engine  = "auto";
  std::string format  = "human";
  std::string bids;
  std::string out_path;
  std::uint64_t budget = 0;  // 0 = environment or built-in default
  unsigned threads     = 0;  // 0 = hardware concurrency
  bool with_fit        = false;
  std::size_t points   = 0;  // 0 = every point up to max_m

  EnumerationOptions enumeration() const
  {
    EnumerationOptions o;
    o.budget  = budget != 0 ? budget : default_enumeration_budget();
    o.threads = threads;
    return o;
  }

  int fit_degree() const { return degree >= 0 ? degree : parties; }
};

BidVector parse_bids(const std::string& text)
{
  BidVector bids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Bid value   = 0;
    const char* first = item.data();
    const char* last  = item.data() + item.size();
    auto [end, ec]    = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc{} || end != last)
      throw UsageError("cannot parse bid '" + item + "' in --bids " + text);
    bids.push_back(value);
  }
  if (bids.empty())
    throw UsageError("--bids needs at least one comma-separated value");
  return bids;
}

void require_positive(const char* flag, long long value)
{
  if (value < 1)
    throw UsageError(std::string(flag) + " is required and must be >= 1");
}

std::string cmd_price(const RunConfig& cfg)
{
  const BidVector bids = parse_bids(cfg.bids);
  const Sale sale      = run_auction(bids);
  switch (parse_format(cfg.format)) {
    case OutputFormat::Json: return to_json(sale, bids).dump() + "\n";
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "price,buyers,benefit\n" << sale.price << ',' << sale.buyers.size() << ',' << sale.benefit << '\n';
      return os.str();
    }
    default: return format_human(sale);
  }
}

std::string cmd_table(const RunConfig& cfg)
{
  require_positive("--m", cfg.m);
  const auto format = parse_format(cfg.format);
  if (format == OutputFormat::Human && cfg.m > kMaxHumanTable)
    throw DomainError("table with m = " + std::to_string(cfg.m) + " is too large to render (limit " +
                      std::to_string(kMaxHumanTable) + "); use --format csv");
  if (cfg.m > kMaxCsvTable)
    throw DomainError("table with m = " + std::to_string(cfg.m) + " exceeds the output limit of " +
                      std::to_string(kMaxCsvTable));
  const auto table = make_output_table(cfg.m);
  switch (format) {
    case OutputFormat::Json: return table_to_json(table).dump() + "\n";
    case OutputFormat::Csv: return render_table_csv(table);
    default: return render_table_human(table);
  }
}

std::string cmd_entropy(const RunConfig& cfg)
{
  require_positive("--n", cfg.parties);
  require_positive("--m", cfg.m);
  const auto report = compute_leakage(cfg.parties, cfg.m, parse_engine(cfg.engine), cfg.enumeration());
  switch (parse_format(cfg.format)) {
    case OutputFormat::Json: return to_json(report).dump() + "\n";
    case OutputFormat::Csv: return format_csv(report);
    default: return format_human(report);
  }
}

std::string cmd_verify(const RunConfig& cfg, bool& mismatch)
{
  require_positive("--n", cfg.parties);
  require_positive("--max-m", cfg.max_m);
  const auto report = verify_engines(cfg.parties, cfg.max_m, cfg.enumeration());
  mismatch          = !report.all_match();
  switch (parse_format(cfg.format)) {
    case OutputFormat::Json: return to_json(report).dump() + "\n";
    case OutputFormat::Csv: return format_csv(report);
    default: return format_human(report);
  }
}

CountSeries make_series(const RunConfig& cfg)
{
  require_positive("--n", cfg.parties);
  require_positive("--max-m", cfg.max_m);
  SeriesOptions options;
  options.engine      = parse_engine(cfg.engine);
  options.enumeration = cfg.enumeration();
  auto series         = generate_series(cfg.parties, cfg.max_m, options);
  return cfg.points > 0 ? truncate_series(series, cfg.points) : series;
}

std::string fit_output(const RunConfig& cfg, const CountSeries& series, OutputFormat format)
{
  const int degree = cfg.fit_degree();
  if (degree == series.parties) {
    const auto row = conjecture_row(series);
    return format == OutputFormat::Human ? format_human(row) : to_json(row).dump() + "\n";
  }
  const auto fit = polyfit_least_squares(series, degree);
  return to_json(fit).dump() + "\n";
}

std::string cmd_series(const RunConfig& cfg)
{
  const auto series = make_series(cfg);
  std::string text  = series_csv(series);
  if (cfg.with_fit) {
    // CSV block, then the fit as one JSON line
    text += fit_output(cfg, series, OutputFormat::Json);
  }
  return text;
}

std::string cmd_fit(const RunConfig& cfg)
{
  const auto series = make_series(cfg);
  auto format       = parse_format(cfg.format);
  return fit_output(cfg, series, format == OutputFormat::Human ? OutputFormat::Human : OutputFormat::Json);
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool enumeration)
{
  cmd->add_option("--format", cfg.format, "Output format: human, csv or json")->capture_default_str();
  cmd->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  if (enumeration) {
    cmd->add_option("--budget", cfg.budget,
                    std::string("Maximum tuple evaluations for enumeration (default: $") + kBudgetEnvVar +
                        " or 2e9)");
    cmd->add_option("--threads", cfg.threads, "Worker threads, 0 = all cores")->capture_default_str();
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  RunConfig cfg;
  CLI::App app{"Min-entropy leakage of bids in digital goods auctions", "bidleak"};
  app.require_subcommand(1);

  auto* price = app.add_subcommand("price", "Sales price, buyers and seller benefit for a bid vector");
  price->add_option("--bids", cfg.bids, "Comma-separated bids, e.g. 1,1,4,1")->required();
  add_common(price, cfg, false);

  auto* table = app.add_subcommand("table", "Two-party price table for bids in [1, m]");
  table->add_option("--m", cfg.m, "Domain bound")->required();
  add_common(table, cfg, false);

  auto* entropy = app.add_subcommand("entropy", "Posterior min-entropy of one bid given the price");
  entropy->add_option("--n", cfg.parties, "Number of parties")->required();
  entropy->add_option("--m", cfg.m, "Domain bound")->required();
  entropy->add_option("--engine", cfg.engine, "oracle, closed2, fast3 or auto")->capture_default_str();
  add_common(entropy, cfg, true);

  auto* verify = app.add_subcommand("verify", "Check the fast engines against enumeration for m = 1..max-m");
  verify->add_option("--n", cfg.parties, "Number of parties (2 or 3)")->required();
  verify->add_option("--max-m", cfg.max_m, "Largest domain bound")->required();
  add_common(verify, cfg, true);

  auto* series = app.add_subcommand("series", "CSV of c_n(m) for m = 1..max-m");
  auto* fit    = app.add_subcommand("fit", "Least-squares polynomial fit of c_n(1..max-m)");
  for (auto* cmd : {series, fit}) {
    cmd->add_option("--n", cfg.parties, "Number of parties")->required();
    cmd->add_option("--max-m", cfg.max_m, "Series length")->capture_default_str();
    cmd->add_option("--degree", cfg.degree, "Polynomial degree (default: n)");
    cmd->add_option("--points", cfg.points, "Use only the first N points");
    cmd->add_option("--engine", cfg.engine, "oracle, closed2, fast3 or auto")->capture_default_str();
    add_common(cmd, cfg, true);
  }
  series->add_flag("--fit", cfg.with_fit, "Append the polynomial fit as a JSON line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    bool mismatch = false;
    if (price->parsed())
      text = cmd_price(cfg);
    else if (table->parsed())
      text = cmd_table(cfg);
    else if (entropy->parsed())
      text = cmd_entropy(cfg);
    else if (verify->parsed())
      text = cmd_verify(cfg, mismatch);
    else if (series->parsed())
      text = cmd_series(cfg);
    else if (fit->parsed())
      text = cmd_fit(cfg);

    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file)
        throw UsageError("cannot open " + cfg.out_path + " for writing");
      file << text;
    }
    return mismatch ? kExitMismatch : kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::logic_error& e) {
    err << "verification error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace bidleak
