#ifndef ARSTAT_TOOLS_CLI_SUPPORT_HPP
#define ARSTAT_TOOLS_CLI_SUPPORT_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "arstat/params.hpp"
#include "arstat/report.hpp"
#include "arstat_default_tolerances.hpp"

namespace arstat::cli {

using json = nlohmann::json;
using Complex = std::complex<double>;

inline double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("not a number: '" + text + "'");
  return v;
}

/// Parses "re", "imj", "re+imj", "re-imj" or "mod:arg" (argument in radians).
inline Complex parse_complex(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.empty()) throw ParameterError("empty complex number");
  if (auto colon = text.find(':'); colon != std::string::npos) {
    const double mod = parse_real(text.substr(0, colon));
    const double arg = parse_real(text.substr(colon + 1));
    if (mod < 0.0) throw ParameterError("modulus must be non-negative: '" + text + "'");
    return std::polar(mod, arg);
  }
  const char last = text.back();
  if (last != 'j' && last != 'i') return {parse_real(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  auto imag_part = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

inline std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw ParameterError("empty label list");
  return out;
}

inline std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  return out;
}

/// Suite tolerances; defaults come from config/tolerances.json, embedded at build time.
class Tolerances {
 public:
  Tolerances() : values_(json::parse(kDefaultTolerancesJson).get<std::map<std::string, double>>()) {}

  double get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ParameterError("unknown tolerance key: " + key);
    return it->second;
  }
  void set(const std::string& key, double value) {
    if (!(value > 0.0)) throw ParameterError("tolerance must be positive");
    values_[key] = value;
  }
  void override_all(double value) {
    for (auto& [k, v] : values_) set(k, value);
  }
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

/// Everything a run needs; round-trips through JSON.
struct RunConfig {
  std::string command;  ///< rep | verify | coherent
  std::string target;   ///< suite name or coherent-state family
  std::optional<int> r, k, s, cutoff;
  std::vector<double> energies;
  std::vector<Complex> label;
  std::map<std::string, double> tolerances;  ///< overrides by key
  std::optional<double> tol;                 ///< overrides every key
  std::string format = "pretty";
  std::string out;
  bool quick = false;
  std::string kind;
  std::optional<int> nmax;
  bool timing = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline json config_to_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["target"] = c.target;
  auto opt = [&](const char* key, const std::optional<int>& v) { j[key] = v ? json(*v) : json(nullptr); };
  opt("r", c.r);
  opt("k", c.k);
  opt("s", c.s);
  opt("cutoff", c.cutoff);
  j["energies"] = c.energies;
  json label = json::array();
  for (const auto& z : c.label) label.push_back({z.real(), z.imag()});
  j["label"] = label;
  j["tolerances"] = c.tolerances;
  j["tol"] = c.tol ? json(*c.tol) : json(nullptr);
  j["format"] = c.format;
  j["out"] = c.out;
  j["quick"] = c.quick;
  j["kind"] = c.kind;
  j["nmax"] = c.nmax ? json(*c.nmax) : json(nullptr);
  j["timing"] = c.timing;
  return j;
}

inline RunConfig config_from_json(const json& j) {
  RunConfig c;
  auto opt = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<int>();
  };
  c.command = j.value("command", "");
  c.target = j.value("target", "");
  c.r = opt("r");
  c.k = opt("k");
  c.s = opt("s");
  c.cutoff = opt("cutoff");
  c.nmax = opt("nmax");
  if (j.contains("energies")) c.energies = j.at("energies").get<std::vector<double>>();
  if (j.contains("label"))
    for (const auto& z : j.at("label")) c.label.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  if (j.contains("tolerances")) c.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
  if (j.contains("tol") && !j.at("tol").is_null()) c.tol = j.at("tol").get<double>();
  c.format = j.value("format", "pretty");
  c.out = j.value("out", "");
  c.quick = j.value("quick", false);
  c.kind = j.value("kind", "");
  c.timing = j.value("timing", false);
  return c;
}

/// Tolerances for a run: shipped defaults, then per-key overrides, then --tol.
inline Tolerances resolve_tolerances(const RunConfig& c) {
  Tolerances t;
  for (const auto& [k, v] : c.tolerances) {
    t.get(k);
    t.set(k, v);
  }
  if (c.tol) t.override_all(*c.tol);
  return t;
}

struct SuiteReport {
  std::string suite;
  std::vector<CheckEntry> entries;
  std::vector<std::string> notes;
  double wall_time = 0.0;

  void absorb(const ResidualReport& rep, const std::string& prefix) {
    for (auto e : rep.entries()) {
      e.name = prefix + e.name;
      entries.push_back(std::move(e));
    }
    for (const auto& n : rep.notes()) notes.push_back(prefix + n);
  }
  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; }));
  }
  std::size_t failed() const { return entries.size() - passed(); }
  bool pass() const { return failed() == 0; }
};

/// Worker count from ARSTAT_THREADS, else the hardware concurrency.
inline unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ARSTAT_THREADS")) {
    int v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) cap = static_cast<unsigned>(v);
  }
  return cap;
}

/// Runs the tasks with at most thread_cap() in flight; results keep task order.
template <class T>
std::vector<T> run_ordered(const std::vector<std::function<T()>>& tasks) {
  std::vector<T> results(tasks.size());
  const unsigned cap = thread_cap();
  if (cap <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  for (std::size_t start = 0; start < tasks.size(); start += cap) {
    std::vector<std::future<T>> batch;
    for (std::size_t i = start; i < std::min(tasks.size(), start + cap); ++i)
      batch.push_back(std::async(std::launch::async, tasks[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  return results;
}

}  // namespace arstat::cli

#endif  // ARSTAT_TOOLS_CLI_SUPPORT_HPP
