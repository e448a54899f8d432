#ifndef ARSTAT_REPORT_HPP
#define ARSTAT_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace arstat {

/// One named comparison. `pass` is always `residual <= tolerance`.
struct CheckEntry {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Collection of checks produced by a verifier.
class ResidualReport {
 public:
  ResidualReport() = default;
  explicit ResidualReport(std::string subject) : subject_(std::move(subject)) {}

  const CheckEntry& add(std::string name, double residual, double tolerance, double lhs = 0.0, double rhs = 0.0) {
    entries_.push_back({std::move(name), lhs, rhs, residual, tolerance, residual <= tolerance});
    return entries_.back();
  }

  void merge(const ResidualReport& other, const std::string& prefix = {}) {
    for (auto e : other.entries_) {
      if (!prefix.empty()) e.name = prefix + e.name;
      entries_.push_back(std::move(e));
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::string& subject() const { return subject_; }
  const std::vector<CheckEntry>& entries() const { return entries_; }
  const std::vector<std::string>& notes() const { return notes_; }

  double max_residual() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.residual);
    return m;
  }

  bool pass() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.pass; });
  }

  std::vector<CheckEntry> failures() const {
    std::vector<CheckEntry> out;
    for (const auto& e : entries_)
      if (!e.pass) out.push_back(e);
    return out;
  }

 private:
  std::string subject_;
  std::vector<CheckEntry> entries_;
  std::vector<std::string> notes_;
};

}  // namespace arstat

#endif  // ARSTAT_REPORT_HPP
