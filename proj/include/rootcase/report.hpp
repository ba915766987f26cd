#pragma once

#include <algorithm>
#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootcase/errors.hpp"

namespace rootcase {

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped-out-of-scope";
  }
  return "?";
}

struct ReportItem {
  std::string id;
  Status status = Status::Fail;
  std::string witness;
  long long ms = 0;
};

/// Structured pass/fail record per table row / lemma predicate / invariant.
/// Items are keyed by a stable id; rendering sorts by id so reports are
/// byte-identical across runs (wall-clock excluded via zero_timing).
class VerificationReport {
 public:
  void add(ReportItem item) { items_.push_back(std::move(item)); }

  void merge(const VerificationReport& other) {
    for (const auto& it : other.items_) items_.push_back(it);
  }

  const std::vector<ReportItem>& items() const { return items_; }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& it : items_)
      if (it.status == s) ++n;
    return n;
  }

  bool all_ok() const { return count(Status::Fail) == 0; }

  void sort_by_id() {
    std::sort(items_.begin(), items_.end(),
              [](const ReportItem& a, const ReportItem& b) { return a.id < b.id; });
  }

  void zero_timing() {
    for (auto& it : items_) it.ms = 0;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["version"] = "1";
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : items_) {
      nlohmann::ordered_json o;
      o["id"] = it.id;
      o["status"] = to_string(it.status);
      o["witness"] = it.witness;
      o["ms"] = it.ms;
      j["items"].push_back(std::move(o));
    }
    j["summary"] = {{"pass", count(Status::Pass)},
                    {"fail", count(Status::Fail)},
                    {"skipped", count(Status::Skipped)}};
    return j;
  }

  std::string to_json_string() const { return to_json().dump(2) + "\n"; }

  std::string to_markdown() const {
    std::string out = "| id | status | witness | ms |\n|---|---|---|---|\n";
    for (const auto& it : items_) {
      out += "| " + it.id + " | " + to_string(it.status) + " | " + it.witness +
             " | " + std::to_string(it.ms) + " |\n";
    }
    out += "\npass: " + std::to_string(count(Status::Pass)) +
           ", fail: " + std::to_string(count(Status::Fail)) +
           ", skipped: " + std::to_string(count(Status::Skipped)) + "\n";
    return out;
  }

  std::string to_tsv() const {
    std::string out = "id\tstatus\twitness\tms\n";
    for (const auto& it : items_)
      out += it.id + "\t" + to_string(it.status) + "\t" + it.witness + "\t" +
             std::to_string(it.ms) + "\n";
    return out;
  }

 private:
  std::vector<ReportItem> items_;
};

/// Runs fn, capturing elapsed milliseconds into the produced item.
template <typename Fn>
ReportItem timed_item(const std::string& id, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  ReportItem item;
  try {
    item = fn();
  } catch (const std::exception& e) {
    item.status = Status::Fail;
    item.witness = std::string("exception: ") + e.what();
  }
  item.id = id;
  item.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  return item;
}

}  // namespace rootcase
