#include "plhg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "plhg/error.hpp"

namespace plhg {
namespace {

constexpr std::size_t kMinGridPoints = 4;

// Runs job(0..count-1) on `workers` threads. Jobs write into their own
// slots, so the schedule never affects results. The exception of the
// lowest-numbered failing job is rethrown.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& job) {
  workers = std::max(1u, workers);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        next.store(count);
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned spawn =
      static_cast<unsigned>(std::min<std::size_t>(workers, count));
  for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(run);
  for (auto& thread : threads) thread.join();
  if (error) std::rethrow_exception(error);
}

class CountingSink final : public EdgeSink {
 public:
  CountingSink(std::uint64_t n, int m, bool loose2) {
    if (loose2) accumulator_.emplace(n, m);
  }
  void on_edge(std::span<const Vertex> tuple) override {
    ++edges_;
    if (accumulator_) accumulator_->add(tuple);
  }
  std::uint64_t edges() const { return edges_; }
  std::optional<Count> loose2() const {
    if (!accumulator_) return std::nullopt;
    return accumulator_->loose2();
  }

 private:
  std::uint64_t edges_ = 0;
  std::optional<Loose2Accumulator> accumulator_;
};

void check_grid(std::span<const std::uint64_t> ns, const char* what) {
  if (ns.size() < kMinGridPoints) {
    fail(ErrorCode::Config, std::string(what) +
                                ": need >= 4 grid points, got " +
                                std::to_string(ns.size()));
  }
}

void check_increasing(std::span<const std::uint64_t> ns, const char* what) {
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i] <= ns[i - 1]) {
      fail(ErrorCode::Config,
           std::string(what) + " must be strictly increasing");
    }
  }
}

double to_double(Count c) { return static_cast<double>(c); }

CellSummary summarize_values(double alpha, std::uint64_t n,
                             std::vector<double> values) {
  CellSummary cell;
  cell.alpha = alpha;
  cell.n = n;
  cell.count = values.size();
  if (values.empty()) return cell;
  double sum = 0.0;
  for (double v : values) sum += v;
  cell.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - cell.mean) * (v - cell.mean);
  const double sd =
      values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1))
                        : 0.0;
  cell.std_error = sd / std::sqrt(static_cast<double>(values.size()));
  cell.rel_std = cell.mean > 0.0 ? sd / cell.mean : 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  cell.median =
      k % 2 == 1 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
  return cell;
}

std::string optional_double(const std::optional<double>& v) {
  return v ? format_double(*v) : "NA";
}

std::string optional_bool(const std::optional<bool>& v) {
  return v ? (*v ? "1" : "0") : "NA";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

const char* to_string(SlopeMethod method) {
  return method == SlopeMethod::OLS ? "ols" : "pairwise";
}

void ExperimentConfig::validate() const {
  if (alphas.empty()) fail(ErrorCode::Config, "alpha grid is empty");
  for (double a : alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      fail(ErrorCode::Config, "alphas must be finite and > 0");
    }
  }
  check_grid(ns, "n grid");
  check_increasing(ns, "n grid");
  if (reps < 1) fail(ErrorCode::Config, "reps must be >= 1");
  if (statistics.empty()) fail(ErrorCode::Config, "no statistics requested");
  if (wants(Statistic::Loose2) && m != 3 && m != 4) {
    fail(ErrorCode::Config, "loose2 requires m in {3, 4}");
  }
  if (wants(Statistic::Loose2) && m == 4 && ns.back() > (1ULL << 21)) {
    fail(ErrorCode::Config, "loose2 with m = 4 requires n <= 2^21");
  }
  for (std::uint64_t n : ns) {
    ModelConfig model;
    model.n = n;
    model.m = m;
    model.tau = tau;
    model.method = method;
    model.validate();
  }
}

bool ExperimentConfig::wants(Statistic statistic) const {
  return std::find(statistics.begin(), statistics.end(), statistic) !=
         statistics.end();
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t alpha_index,
                        std::size_t n_index, std::uint32_t rep) {
  return derive_seed(master_seed, {alpha_index, n_index, rep});
}

StatRecord run_replication(const ExperimentConfig& config, double alpha,
                           std::uint64_t n, std::uint32_t rep,
                           std::uint64_t seed) {
  ModelConfig model;
  model.n = n;
  model.m = config.m;
  model.tau = config.tau;
  model.params = config.params_for(alpha);
  model.seed = seed;
  model.method = config.method;

  const auto start = std::chrono::steady_clock::now();
  RandomStream wrng = weight_stream(seed);
  const WeightAssignment weights = sample_weights(model, wrng);
  CountingSink sink(n, config.m, config.wants(Statistic::Loose2));
  RandomStream erng = edge_stream(seed);
  stream_hypergraph(model, weights, erng, sink);
  const auto stop = std::chrono::steady_clock::now();

  StatRecord record;
  record.alpha = alpha;
  record.n = n;
  record.rep = rep;
  record.seed = seed;
  record.edge_count = sink.edges();
  record.loose2_count = sink.loose2();
  if (config.record_timing) {
    record.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  record.outside_tau_regime = model.outside_tau_regime();
  return record;
}

std::vector<StatRecord> run_experiment(const ExperimentConfig& config,
                                       unsigned workers) {
  config.validate();
  const std::size_t per_alpha = config.ns.size() * config.reps;
  std::vector<StatRecord> records(config.alphas.size() * per_alpha);
  parallel_for(records.size(), workers, [&](std::size_t job) {
    const std::size_t ai = job / per_alpha;
    const std::size_t ni = (job % per_alpha) / config.reps;
    const auto rep = static_cast<std::uint32_t>(job % config.reps);
    records[job] =
        run_replication(config, config.alphas[ai], config.ns[ni], rep,
                        cell_seed(config.master_seed, ai, ni, rep));
  });
  return records;
}

SlopeEstimate fit_slope(std::span<const GridPoint> points,
                        double log_exponent_assumed, SlopeMethod method) {
  if (points.size() < kMinGridPoints) {
    fail(ErrorCode::Config, "slope fit: need >= 4 grid points, got " +
                                std::to_string(points.size()));
  }
  const double b = log_exponent_assumed;
  std::vector<double> x, y;
  for (const GridPoint& p : points) {
    if (!(p.value > 0.0) || !std::isfinite(p.value)) {
      fail(ErrorCode::Domain, "slope fit: statistic must be > 0 at n = " +
                                  format_double(p.n));
    }
    if (!(p.n > 0.0) || (b != 0.0 && !(p.n > 1.0))) {
      fail(ErrorCode::Domain, "slope fit: n must be > 1");
    }
    const double ln = std::log(p.n);
    x.push_back(ln);
    y.push_back(std::log(p.value) - (b != 0.0 ? b * std::log(ln) : 0.0));
  }
  SlopeEstimate est;
  est.log_exponent_assumed = b;
  est.method = method;
  const std::size_t k = x.size();
  if (method == SlopeMethod::OLS) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) fail(ErrorCode::Domain, "slope fit: n values coincide");
    est.n_exponent_hat = sxy / sxx;
    const double intercept = my - est.n_exponent_hat * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double r = y[i] - intercept - est.n_exponent_hat * x[i];
      ssr += r * r;
    }
    est.std_error = std::sqrt(ssr / static_cast<double>(k - 2) / sxx);
    return est;
  }
  std::vector<double> steps;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const double dx = x[i + 1] - x[i];
    if (!(dx > 0.0)) {
      fail(ErrorCode::Domain, "slope fit: n must be strictly increasing");
    }
    steps.push_back((y[i + 1] - y[i]) / dx);
  }
  double mean = 0.0;
  for (double s : steps) mean += s;
  mean /= static_cast<double>(steps.size());
  double ss = 0.0;
  for (double s : steps) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / static_cast<double>(steps.size() - 1));
  est.n_exponent_hat = mean;
  est.std_error = sd / std::sqrt(static_cast<double>(steps.size()));
  return est;
}

std::vector<CellSummary> summarize(std::span<const StatRecord> records,
                                   Statistic statistic) {
  std::map<std::pair<double, std::uint64_t>, std::vector<double>> cells;
  for (const StatRecord& r : records) {
    double value;
    if (statistic == Statistic::Edges) {
      value = static_cast<double>(r.edge_count);
    } else {
      if (!r.loose2_count) {
        fail(ErrorCode::Config, "records carry no loose2 counts");
      }
      value = to_double(*r.loose2_count);
    }
    cells[{r.alpha, r.n}].push_back(value);
  }
  std::vector<CellSummary> out;
  for (auto& [key, values] : cells) {
    out.push_back(summarize_values(key.first, key.second, std::move(values)));
  }
  return out;
}

Tolerance tolerance_for(Statistic statistic, double alpha, double tau) {
  if (statistic == Statistic::Loose2) {
    if (alpha > 2.0) return {0.15, std::nullopt, std::nullopt};
    if (alpha == 2.0) return {0.25, std::nullopt, std::nullopt};
    return {0.2, std::nullopt, std::nullopt};
  }
  if (tau != 1.0) return {0.15, std::nullopt, 2.0};
  if (alpha > 1.0) return {0.1, 0.1, std::nullopt};
  if (alpha == 1.0) return {0.2, std::nullopt, std::nullopt};
  return {0.15, std::nullopt, 2.0};
}

std::vector<ComparisonRow> compare_to_theory(
    std::span<const StatRecord> records, const PowerLawParams& params_template,
    Statistic statistic, int m, double tau) {
  const std::vector<CellSummary> cells = summarize(records, statistic);
  std::map<double, std::vector<GridPoint>> by_alpha;
  for (const CellSummary& c : cells) {
    by_alpha[c.alpha].push_back({static_cast<double>(c.n), c.mean});
  }
  std::vector<ComparisonRow> rows;
  for (const auto& [alpha, points] : by_alpha) {
    if (points.size() < kMinGridPoints) {
      fail(ErrorCode::Config, "alpha = " + format_double(alpha) +
                                  ": need >= 4 grid points, got " +
                                  std::to_string(points.size()));
    }
    const PowerLawParams params = params_template.with_alpha(alpha);
    const SlopePair slopes = theoretical_slopes(params, statistic, m, tau);
    const Tolerance tol = tolerance_for(statistic, alpha, tau);

    ComparisonRow row;
    row.alpha = alpha;
    row.statistic = statistic;
    row.predicted_n_exponent = slopes.n_exponent;
    row.log_exponent = slopes.log_exponent;
    row.pairwise =
        fit_slope(points, slopes.log_exponent, SlopeMethod::PairwiseRatio);
    row.ols = fit_slope(points, slopes.log_exponent, SlopeMethod::OLS);
    row.exponent_tolerance = tol.exponent;
    row.exponent_pass = std::abs(row.pairwise.n_exponent_hat -
                                 slopes.n_exponent) <= tol.exponent;

    if (statistic == Statistic::Edges && alpha != 1.0) {
      row.predicted_constant =
          tau == 1.0 ? edge_count_constant(params, m)
                     : *predict_edge_count_tau(params, m, tau, 2).constant;
      const GridPoint& last = points.back();
      row.fitted_constant =
          last.value / (std::pow(last.n, slopes.n_exponent) *
                        std::pow(std::log(last.n), slopes.log_exponent));
      const double ratio = *row.fitted_constant / *row.predicted_constant;
      if (tol.constant_rel) {
        row.constant_pass = std::abs(ratio - 1.0) <= *tol.constant_rel;
      } else if (tol.constant_factor) {
        row.constant_pass = ratio >= 1.0 / *tol.constant_factor &&
                            ratio <= *tol.constant_factor;
      }
    }
    if (statistic == Statistic::Loose2 && alpha > 2.0) {
      bool below = true;
      for (const GridPoint& p : points) {
        const auto pred =
            predict_loose2(params, static_cast<std::uint64_t>(p.n));
        below = below && p.value < *pred.upper_bound_value;
      }
      row.upper_bound_pass = below;
    }
    rows.push_back(row);
  }
  return rows;
}

void ErConfig::validate() const {
  if (ns.empty()) fail(ErrorCode::Config, "er: n grid is empty");
  check_increasing(ns, "er: n grid");
  if (ns.front() < 3) fail(ErrorCode::Config, "er: n must be >= 3");
  if (reps < 1) fail(ErrorCode::Config, "er: reps must be >= 1");
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorCode::Config, "er: c must be finite and > 0");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    fail(ErrorCode::Config, "er: alpha must be finite and > 0");
  }
  if (ns.back() > 0xffffffffULL) {
    fail(ErrorCode::Config, "er: n must fit in 32 bits");
  }
}

ErComparisonReport er_comparison(const ErConfig& config, unsigned workers) {
  config.validate();
  constexpr int m = 3;
  constexpr std::uint64_t kModelTag = 0, kErTag = 1;
  ExperimentConfig h_config;
  h_config.m = m;
  h_config.params_template = config.params_template;
  h_config.method = config.method;
  h_config.statistics = {Statistic::Edges, Statistic::Loose2};
  h_config.record_timing = false;

  ErComparisonReport report;
  for (std::size_t ni = 0; ni < config.ns.size(); ++ni) {
    const std::uint64_t n = config.ns[ni];
    std::vector<StatRecord> h(config.reps);
    parallel_for(config.reps, workers, [&](std::size_t rep) {
      const auto r = static_cast<std::uint32_t>(rep);
      h[rep] = run_replication(h_config, config.alpha, n, r,
                               derive_seed(config.master_seed,
                                           {kModelTag, ni, rep}));
    });

    ErComparisonRow row;
    row.n = n;
    row.h_edges = summarize(h, Statistic::Edges).front();
    row.h_loose2 = summarize(h, Statistic::Loose2).front();
    row.p = std::min(
        1.0, config.c * row.h_edges.mean / static_cast<double>(binomial(n, m)));

    std::vector<StatRecord> g(config.reps);
    parallel_for(config.reps, workers, [&](std::size_t rep) {
      const std::uint64_t seed =
          derive_seed(config.master_seed, {kErTag, ni, rep});
      RandomStream rng(seed);
      CountingSink sink(n, m, true);
      stream_erdos_renyi(n, m, row.p, rng, sink);
      StatRecord& r = g[rep];
      r.alpha = config.alpha;
      r.n = n;
      r.rep = static_cast<std::uint32_t>(rep);
      r.seed = seed;
      r.edge_count = sink.edges();
      r.loose2_count = sink.loose2();
    });
    row.g_edges = summarize(g, Statistic::Edges).front();
    row.g_loose2 = summarize(g, Statistic::Loose2).front();
    row.g_loose2_expected = er_loose2_expectation(n, row.p);
    row.ratio = row.g_loose2.mean > 0.0
                    ? row.h_loose2.mean / row.g_loose2.mean
                    : std::numeric_limits<double>::infinity();
    const double se_h = config.c * row.h_edges.std_error;
    const double se_g = row.g_edges.std_error;
    row.edges_matched =
        std::abs(row.g_edges.mean - config.c * row.h_edges.mean) <=
        3.0 * std::sqrt(se_h * se_h + se_g * se_g);
    report.rows.push_back(row);
  }

  report.ratio_increasing = true;
  report.edges_matched = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    report.edges_matched = report.edges_matched && report.rows[i].edges_matched;
    if (i > 0) {
      report.ratio_increasing = report.ratio_increasing &&
                                report.rows[i].ratio > report.rows[i - 1].ratio;
    }
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double h_b =
      theoretical_slopes(config.params_template.with_alpha(config.alpha),
                         Statistic::Loose2, m)
          .log_exponent;
  report.h_slope = {nan, nan, h_b, SlopeMethod::PairwiseRatio};
  report.g_slope = {nan, nan, 6.0, SlopeMethod::PairwiseRatio};
  std::vector<GridPoint> hp, gp;
  bool positive = true;
  for (const ErComparisonRow& row : report.rows) {
    hp.push_back({static_cast<double>(row.n), row.h_loose2.mean});
    gp.push_back({static_cast<double>(row.n), row.g_loose2.mean});
    positive = positive && row.h_loose2.mean > 0.0 && row.g_loose2.mean > 0.0;
  }
  if (hp.size() >= kMinGridPoints && positive) {
    report.h_slope = fit_slope(hp, h_b, SlopeMethod::PairwiseRatio);
    report.g_slope = fit_slope(gp, 6.0, SlopeMethod::PairwiseRatio);
  }
  return report;
}

void write_records_csv(std::ostream& out, std::span<const StatRecord> records,
                       int m, double tau) {
  out << kRecordsHeader << '\n';
  const std::string m_text = std::to_string(m), tau_text = format_double(tau);
  for (const StatRecord& r : records) {
    out << format_double(r.alpha) << ',' << r.n << ',' << m_text << ','
        << tau_text << ',' << r.rep << ',' << r.seed << ',' << r.edge_count
        << ',' << (r.loose2_count ? to_string(*r.loose2_count) : "NA") << ','
        << format_double(r.wall_ms) << '\n';
  }
}

RecordsFile read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::Parse, "records: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordsHeader) {
    fail(ErrorCode::Parse, "records: unexpected header '" + line + "'");
  }
  RecordsFile file;
  bool first = true;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    const std::string where = "records line " + std::to_string(line_no);
    if (fields.size() != 9) fail(ErrorCode::Parse, where + ": expected 9 fields");
    try {
      std::size_t used = 0;
      auto whole = [&](const std::string& s) {
        if (used != s.size()) throw std::invalid_argument(s);
      };
      auto num = [&](const std::string& s) {
        const double v = std::stod(s, &used);
        whole(s);
        return v;
      };
      auto u64 = [&](const std::string& s) {
        if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
        const auto v = std::stoull(s, &used);
        whole(s);
        return static_cast<std::uint64_t>(v);
      };
      StatRecord r;
      r.alpha = num(fields[0]);
      r.n = u64(fields[1]);
      const int m = static_cast<int>(u64(fields[2]));
      const double tau = num(fields[3]);
      const std::uint64_t rep = u64(fields[4]);
      if (rep > 0xffffffffULL) throw std::out_of_range(fields[4]);
      r.rep = static_cast<std::uint32_t>(rep);
      r.seed = u64(fields[5]);
      r.edge_count = u64(fields[6]);
      if (fields[7] != "NA") r.loose2_count = parse_count(fields[7]);
      r.wall_ms = num(fields[8]);
      if (first) {
        file.m = m;
        file.tau = tau;
        first = false;
      } else if (m != file.m || tau != file.tau) {
        fail(ErrorCode::Parse, where + ": m and tau must be constant");
      }
      r.outside_tau_regime = r.alpha < 1.0 && tau > 1.0 / r.alpha;
      file.records.push_back(r);
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, where + ": malformed field");
    }
  }
  if (first) fail(ErrorCode::Parse, "records: no data rows");
  return file;
}

void write_report_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << "alpha,statistic,predicted_n_exponent,log_exponent,"
         "fitted_n_exponent,fitted_stderr,ols_n_exponent,ols_stderr,"
         "exponent_tolerance,predicted_constant,fitted_constant,"
         "constant_pass,upper_bound_pass,pass\n";
  for (const ComparisonRow& r : rows) {
    out << format_double(r.alpha) << ',' << to_string(r.statistic) << ','
        << format_double(r.predicted_n_exponent) << ','
        << format_double(r.log_exponent) << ','
        << format_double(r.pairwise.n_exponent_hat) << ','
        << format_double(r.pairwise.std_error) << ','
        << format_double(r.ols.n_exponent_hat) << ','
        << format_double(r.ols.std_error) << ','
        << format_double(r.exponent_tolerance) << ','
        << optional_double(r.predicted_constant) << ','
        << optional_double(r.fitted_constant) << ','
        << optional_bool(r.constant_pass) << ','
        << optional_bool(r.upper_bound_pass) << ',' << (r.pass() ? 1 : 0)
        << '\n';
  }
}

void write_slopes_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << "alpha,statistic,method,n_exponent_hat,stderr,log_exponent_assumed\n";
  for (const ComparisonRow& r : rows) {
    for (const SlopeEstimate* e : {&r.pairwise, &r.ols}) {
      out << format_double(r.alpha) << ',' << to_string(r.statistic) << ','
          << to_string(e->method) << ',' << format_double(e->n_exponent_hat)
          << ',' << format_double(e->std_error) << ','
          << format_double(e->log_exponent_assumed) << '\n';
    }
  }
}

void write_cells_csv(std::ostream& out, std::span<const CellSummary> cells,
                     Statistic statistic) {
  out << "alpha,n,statistic,count,mean,std_error,median,rel_std\n";
  for (const CellSummary& c : cells) {
    out << format_double(c.alpha) << ',' << c.n << ',' << to_string(statistic)
        << ',' << c.count << ',' << format_double(c.mean) << ','
        << format_double(c.std_error) << ',' << format_double(c.median) << ','
        << format_double(c.rel_std) << '\n';
  }
}

void write_er_report_csv(std::ostream& out, const ErComparisonReport& report) {
  out << "n,p,h_edges_mean,h_edges_stderr,g_edges_mean,g_edges_stderr,"
         "h_loose2_mean,h_loose2_median,g_loose2_mean,g_loose2_expected,"
         "ratio,edges_matched\n";
  for (const ErComparisonRow& r : report.rows) {
    out << r.n << ',' << format_double(r.p) << ','
        << format_double(r.h_edges.mean) << ','
        << format_double(r.h_edges.std_error) << ','
        << format_double(r.g_edges.mean) << ','
        << format_double(r.g_edges.std_error) << ','
        << format_double(r.h_loose2.mean) << ','
        << format_double(r.h_loose2.median) << ','
        << format_double(r.g_loose2.mean) << ','
        << format_double(r.g_loose2_expected) << ','
        << format_double(r.ratio) << ',' << (r.edges_matched ? 1 : 0) << '\n';
  }
}

void write_er_slopes_csv(std::ostream& out, const ErComparisonReport& report) {
  out << "model,method,n_exponent_hat,stderr,log_exponent_assumed\n";
  const std::pair<const char*, const SlopeEstimate*> fits[] = {
      {"hypergraph", &report.h_slope}, {"erdos_renyi", &report.g_slope}};
  for (const auto& [model, e] : fits) {
    out << model << ',' << to_string(e->method) << ','
        << format_double(e->n_exponent_hat) << ','
        << format_double(e->std_error) << ','
        << format_double(e->log_exponent_assumed) << '\n';
  }
}

}  // namespace plhg
