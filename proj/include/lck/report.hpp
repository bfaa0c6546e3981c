#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lck/matrix.hpp"

namespace lck {

enum class Verdict { Pass, Fail, Skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckEntry {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  Locus locus;
};

/// Outcome of an identity that may hold only on part of the parameter
/// space: `locus` lists the polynomials that must vanish for it to hold.
struct Identity {
  bool holds = true;
  Locus locus;
  std::string witness;

  /// Records a defect entry; `where` names the basis tuple it came from.
  void note(const Scalar& defect, const std::string& where) {
    if (defect.is_zero()) return;
    if (holds) witness = where;
    holds = false;
    locus.add(defect.num());
  }
  /// True when the identity holds at the given point (all defects vanish).
  bool holds_at(const Assignment& at) const {
    if (holds) return true;
    for (const auto& p : locus.polys())
      if (p.eval(at) != 0) return false;
    return true;
  }
};

class StructureReport {
 public:
  StructureReport() = default;
  explicit StructureReport(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<CheckEntry>& entries() const { return entries_; }
  void set_title(std::string t) { title_ = std::move(t); }

  CheckEntry& add(std::string name, bool ok, std::string detail = {}, Locus locus = {}) {
    entries_.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail),
                        std::move(locus)});
    return entries_.back();
  }
  CheckEntry& skip(std::string name, std::string why) {
    entries_.push_back({std::move(name), Verdict::Skipped, std::move(why), {}});
    return entries_.back();
  }
  void append(const StructureReport& other, const std::string& prefix = {}) {
    for (auto e : other.entries_) {
      if (!prefix.empty()) e.name = prefix + "." + e.name;
      entries_.push_back(std::move(e));
    }
  }
  /// Exclusion polynomials the generic verdicts assume nonzero.
  void exclude(const Locus& l) { excluded_.merge(l); }
  const Locus& excluded() const { return excluded_; }

  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.verdict == Verdict::Fail;
    return n;
  }
  bool all_passed() const { return failed() == 0; }

  std::string text() const {
    std::ostringstream os;
    if (!title_.empty()) os << "== " << title_ << "\n";
    for (const auto& e : entries_) {
      os << to_string(e.verdict) << "  " << e.name;
      if (!e.detail.empty()) os << ": " << e.detail;
      if (!e.locus.empty()) os << "  locus " << e.locus.str();
      os << "\n";
    }
    if (!excluded_.empty()) os << "excluded " << excluded_.str() << "\n";
    os << (all_passed() ? "OK" : "FAILED") << " (" << entries_.size() << " checks, " << failed()
       << " failed)\n";
    return os.str();
  }

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["title"] = title_;
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& e : entries_) {
      nlohmann::ordered_json c;
      c["name"] = e.name;
      c["verdict"] = std::string(to_string(e.verdict));
      if (!e.detail.empty()) c["detail"] = e.detail;
      if (!e.locus.empty()) {
        auto& l = c["locus"] = nlohmann::ordered_json::array();
        for (const auto& p : e.locus.polys()) l.push_back(p.str());
      }
      arr.push_back(std::move(c));
    }
    if (!excluded_.empty()) {
      auto& l = j["excluded"] = nlohmann::ordered_json::array();
      for (const auto& p : excluded_.polys()) l.push_back(p.str());
    }
    j["failed"] = failed();
    j["passed"] = all_passed();
    return j;
  }

 private:
  std::string title_;
  std::vector<CheckEntry> entries_;
  Locus excluded_;
};

}  // namespace lck
