#include "plhg/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "plhg/error.hpp"

namespace plhg {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& what) {
  fail(ErrorCode::Config, "config key '" + key + "': " + what);
}

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) bad(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      fail(ErrorCode::Config,
           "unknown config key '" + (where.empty() ? key : where + "." + key) +
               "'");
    }
  }
}

double get_real(const json& v, const std::string& key) {
  if (!v.is_number()) bad(key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad(key, "expected a finite number");
  return d;
}

std::uint64_t get_u64(const json& v, const std::string& key) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned()
                                  && v.get<std::int64_t>() < 0)) {
    bad(key, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint32_t get_u32(const json& v, const std::string& key) {
  const std::uint64_t x = get_u64(v, key);
  if (x > 0xffffffffULL) bad(key, "value too large");
  return static_cast<std::uint32_t>(x);
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) bad(key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> get_reals(const json& v, const std::string& key) {
  if (!v.is_array()) bad(key, "expected a list of numbers");
  std::vector<double> out;
  for (const json& x : v) out.push_back(get_real(x, key));
  return out;
}

std::vector<std::uint64_t> get_ns(const json& v, const std::string& key) {
  std::vector<std::uint64_t> out;
  if (v.is_array()) {
    for (const json& x : v) out.push_back(get_u64(x, key));
    return out;
  }
  if (!v.is_object()) bad(key, "expected a list or {min, max, ratio}");
  check_keys(v, key, {"min", "max", "ratio"});
  if (!v.contains("min") || !v.contains("max")) {
    bad(key, "geometric grid needs min and max");
  }
  const std::uint64_t lo = get_u64(v["min"], key + ".min");
  const std::uint64_t hi = get_u64(v["max"], key + ".max");
  const std::uint64_t ratio =
      v.contains("ratio") ? get_u64(v["ratio"], key + ".ratio") : 2;
  if (lo < 1 || ratio < 2) bad(key, "need min >= 1 and integer ratio >= 2");
  for (std::uint64_t n = lo; n <= hi; n *= ratio) {
    out.push_back(n);
    if (n > hi / ratio) break;
  }
  return out;
}

std::vector<Statistic> get_statistics(const json& v, const std::string& key) {
  std::vector<Statistic> out;
  if (v.is_string()) {
    out.push_back(parse_statistic(v.get<std::string>()));
    return out;
  }
  if (!v.is_array()) bad(key, "expected a list of statistic names");
  for (const json& x : v) out.push_back(parse_statistic(get_string(x, key)));
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

double parse_real(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::logic_error&) {
  }
  bad(key, "'" + text + "' is not a number");
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] != '-') {
      const unsigned long long v = std::stoull(text, &used);
      if (used == text.size()) return v;
    }
  } catch (const std::logic_error&) {
  }
  bad(key, "'" + text + "' is not a non-negative integer");
}

std::uint32_t parse_u32(const std::string& key, const std::string& text) {
  const std::uint64_t v = parse_u64(key, text);
  if (v > 0xffffffffULL) bad(key, "value too large");
  return static_cast<std::uint32_t>(v);
}

int parse_m(const std::string& key, std::uint64_t v) {
  if (v > 64) bad(key, "m is unreasonably large");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  bad(key, "'" + text + "' is not a boolean");
}

Body body_from(const std::string& key, const std::string& name) {
  try {
    return parse_body(name.c_str());
  } catch (const Error& e) {
    bad(key, e.what());
  }
}

SamplerMethod method_from(const std::string& key, const std::string& name) {
  try {
    return parse_method(name);
  } catch (const Error& e) {
    bad(key, e.what());
  }
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Config, std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(doc, "",
             {"n", "m", "tau", "alpha", "lambda", "x0", "body", "seed",
              "method", "reps", "statistics", "workers", "timing", "out",
              "grid", "er"});
  RunConfig c;
  if (doc.contains("n")) c.n = get_u64(doc["n"], "n");
  if (doc.contains("m")) c.m = parse_m("m", get_u64(doc["m"], "m"));
  if (doc.contains("tau")) c.tau = get_real(doc["tau"], "tau");
  if (doc.contains("alpha")) c.alpha = get_real(doc["alpha"], "alpha");
  if (doc.contains("lambda") && !doc["lambda"].is_null()) {
    c.lambda = get_real(doc["lambda"], "lambda");
  }
  if (doc.contains("x0")) c.x0 = get_real(doc["x0"], "x0");
  if (doc.contains("body")) c.body = body_from("body", get_string(doc["body"], "body"));
  if (doc.contains("seed")) c.seed = get_u64(doc["seed"], "seed");
  if (doc.contains("method")) {
    c.method = method_from("method", get_string(doc["method"], "method"));
  }
  if (doc.contains("reps")) c.reps = get_u32(doc["reps"], "reps");
  if (doc.contains("statistics")) {
    c.statistics = get_statistics(doc["statistics"], "statistics");
  }
  if (doc.contains("workers")) c.workers = get_u32(doc["workers"], "workers");
  if (doc.contains("timing")) {
    if (!doc["timing"].is_boolean()) bad("timing", "expected true or false");
    c.timing = doc["timing"].get<bool>();
  }
  if (doc.contains("out")) c.out = get_string(doc["out"], "out");
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    check_keys(g, "grid", {"alphas", "ns"});
    if (g.contains("alphas")) c.alphas = get_reals(g["alphas"], "grid.alphas");
    if (g.contains("ns")) c.ns = get_ns(g["ns"], "grid.ns");
  }
  if (doc.contains("er")) {
    const json& e = doc["er"];
    check_keys(e, "er", {"ns", "reps", "c", "alpha"});
    if (e.contains("ns")) c.er_ns = get_ns(e["ns"], "er.ns");
    if (e.contains("reps")) c.er_reps = get_u32(e["reps"], "er.reps");
    if (e.contains("c")) c.er_c = get_real(e["c"], "er.c");
    if (e.contains("alpha")) c.er_alpha = get_real(e["alpha"], "er.alpha");
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "n") {
    n = parse_u64(key, value);
  } else if (key == "m") {
    m = parse_m(key, parse_u64(key, value));
  } else if (key == "tau") {
    tau = parse_real(key, value);
  } else if (key == "alpha") {
    alpha = parse_real(key, value);
    alphas.clear();
  } else if (key == "lambda") {
    lambda = parse_real(key, value);
  } else if (key == "x0") {
    x0 = parse_real(key, value);
  } else if (key == "body") {
    body = body_from(key, value);
  } else if (key == "seed") {
    seed = parse_u64(key, value);
  } else if (key == "method") {
    method = method_from(key, value);
  } else if (key == "reps") {
    reps = parse_u32(key, value);
  } else if (key == "statistics") {
    statistics.clear();
    for (const auto& s : split_list(value)) {
      statistics.push_back(parse_statistic(s));
    }
  } else if (key == "workers") {
    workers = parse_u32(key, value);
  } else if (key == "timing") {
    timing = parse_bool(key, value);
  } else if (key == "out") {
    out = value;
  } else if (key == "alphas") {
    alphas.clear();
    for (const auto& s : split_list(value)) alphas.push_back(parse_real(key, s));
  } else if (key == "ns") {
    ns.clear();
    for (const auto& s : split_list(value)) ns.push_back(parse_u64(key, s));
  } else if (key == "er.ns") {
    er_ns.clear();
    for (const auto& s : split_list(value)) er_ns.push_back(parse_u64(key, s));
  } else if (key == "er.reps") {
    er_reps = parse_u32(key, value);
  } else if (key == "er.c") {
    er_c = parse_real(key, value);
  } else if (key == "er.alpha") {
    er_alpha = parse_real(key, value);
  } else {
    fail(ErrorCode::Config, "unknown config key '" + key + "'");
  }
}

std::string RunConfig::to_json() const {
  json doc = json::object();
  doc["n"] = n;
  doc["m"] = m;
  doc["tau"] = tau;
  doc["alpha"] = alpha;
  doc["lambda"] = lambda ? json(*lambda) : json(nullptr);
  doc["x0"] = x0;
  doc["body"] = to_string(body);
  doc["seed"] = seed;
  doc["method"] = to_string(method);
  doc["reps"] = reps;
  json stats = json::array();
  for (Statistic s : statistics) stats.push_back(to_string(s));
  doc["statistics"] = stats;
  doc["workers"] = workers;
  doc["timing"] = timing;
  doc["out"] = out;
  doc["grid"] = {{"alphas", alphas}, {"ns", ns}};
  doc["er"] = {{"ns", er_ns}, {"reps", er_reps}, {"c", er_c},
               {"alpha", er_alpha}};
  return doc.dump(2);
}

PowerLawParams RunConfig::params() const {
  try {
    return PowerLawParams::make(body, alpha, lambda.value_or(-1.0), x0);
  } catch (const Error& e) {
    fail(ErrorCode::Config, e.what());
  }
}

ModelConfig RunConfig::model() const {
  ModelConfig mc;
  mc.n = n;
  mc.m = m;
  mc.tau = tau;
  mc.params = params();
  mc.seed = seed;
  mc.method = method;
  mc.validate();
  return mc;
}

std::vector<double> RunConfig::alpha_grid() const {
  return alphas.empty() ? std::vector<double>{alpha} : alphas;
}

ExperimentConfig RunConfig::experiment() const {
  ExperimentConfig ec;
  ec.alphas = alpha_grid();
  ec.ns = ns;
  ec.reps = reps;
  ec.m = m;
  ec.tau = tau;
  ec.params_template = params();
  ec.master_seed = seed;
  ec.method = method;
  ec.statistics = statistics;
  ec.record_timing = timing;
  ec.validate();
  return ec;
}

ErConfig RunConfig::er() const {
  ErConfig ec;
  ec.ns = er_ns;
  ec.reps = er_reps;
  ec.c = er_c;
  ec.alpha = er_alpha;
  ec.params_template = params();
  ec.master_seed = seed;
  ec.method = method;
  ec.validate();
  return ec;
}

}  // namespace plhg
