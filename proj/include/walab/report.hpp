#pragma once

#include "walab/integral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walab {

inline constexpr const char* kToolVersion = "0.1.0";

/// One verified unit: a named group of exact checks for (algebra, m).
struct CaseReport {
  std::string algebra; // empty for algebra-independent checks
  std::optional<int> m;
  std::optional<int> p;
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> caveats;

  bool pass() const;
};

struct RunReport {
  std::string tool_version = kToolVersion;
  std::string command;
  std::vector<CaseReport> cases;

  long passed() const;
  long failed() const;
  long skipped() const;
  std::vector<std::string> caveats() const;
  void sort_cases();

  std::string to_json() const;
  static RunReport from_json(const std::string& text);
  /// Human-readable rendering; verbose lists every check, otherwise only
  /// failures are expanded.
  std::string render_text(bool verbose = false) const;
};

/// Level table and certificate data in byte-stable form.
std::string tables_markdown();
std::string tables_json();

std::string root_combo_str(const RootSystem& rs, const RootCoords& coords);

} // namespace walab
