#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace tq {

struct ReportItem {
  std::string subject;
  std::string expected;
  std::string actual;
  std::string location;
  bool ok = true;
};

struct Report {
  std::string check;
  std::vector<ReportItem> items;

  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.ok; });
  }
  std::vector<ReportItem> failures() const {
    std::vector<ReportItem> out;
    for (const auto& i : items)
      if (!i.ok) out.push_back(i);
    return out;
  }
  void add(std::string subject, std::string expected, std::string actual, std::string location = {}) {
    const bool ok = expected == actual;
    items.push_back({std::move(subject), std::move(expected), std::move(actual), std::move(location), ok});
  }
  void record(std::string subject, std::string expected, std::string actual, bool ok, std::string location = {}) {
    items.push_back({std::move(subject), std::move(expected), std::move(actual), std::move(location), ok});
  }
  void fail(std::string subject, std::string expected, std::string actual, std::string location = {}) {
    items.push_back({std::move(subject), std::move(expected), std::move(actual), std::move(location), false});
  }
};

}  // namespace tq
