#include "walab/report.hpp"

#include "walab/levels.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace walab {

using nlohmann::json;

bool CaseReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

long RunReport::passed() const {
  long n = 0;
  for (const auto& c : cases)
    for (const auto& ch : c.checks) n += ch.pass ? 1 : 0;
  return n;
}

long RunReport::failed() const {
  long n = 0;
  for (const auto& c : cases)
    for (const auto& ch : c.checks) n += ch.pass ? 0 : 1;
  return n;
}

long RunReport::skipped() const { return 0; }

std::vector<std::string> RunReport::caveats() const {
  std::vector<std::string> out;
  for (const auto& c : cases)
    for (const auto& cv : c.caveats)
      if (std::find(out.begin(), out.end(), cv) == out.end()) out.push_back(cv);
  return out;
}

void RunReport::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const CaseReport& a, const CaseReport& b) {
    if (a.algebra != b.algebra) return a.algebra < b.algebra;
    int ma = a.m.value_or(-2), mb = b.m.value_or(-2);
    if (ma != mb) return ma < mb;
    return a.title < b.title;
  });
}

namespace {

json check_to_json(const Check& c) {
  return json{{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

Check check_from_json(const json& j) {
  return Check{j.at("name"), j.at("pass"), j.at("lhs"), j.at("rhs")};
}

json case_to_json(const CaseReport& c) {
  json j;
  j["algebra"] = c.algebra;
  if (c.m) j["m"] = *c.m; else j["m"] = nullptr;
  if (c.p) j["p"] = *c.p; else j["p"] = nullptr;
  j["title"] = c.title;
  j["checks"] = json::array();
  for (const auto& ch : c.checks) j["checks"].push_back(check_to_json(ch));
  j["caveats"] = c.caveats;
  return j;
}

CaseReport case_from_json(const json& j) {
  CaseReport c;
  c.algebra = j.at("algebra");
  if (!j.at("m").is_null()) c.m = j.at("m").get<int>();
  if (!j.at("p").is_null()) c.p = j.at("p").get<int>();
  c.title = j.at("title");
  for (const auto& ch : j.at("checks")) c.checks.push_back(check_from_json(ch));
  c.caveats = j.at("caveats").get<std::vector<std::string>>();
  return c;
}

} // namespace

std::string RunReport::to_json() const {
  json j;
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["cases"] = json::array();
  for (const auto& c : cases) j["cases"].push_back(case_to_json(c));
  j["summary"] = json{{"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}};
  j["caveats"] = caveats();
  return j.dump(2) + "\n";
}

RunReport RunReport::from_json(const std::string& text) {
  json j = json::parse(text);
  RunReport r;
  r.tool_version = j.at("tool_version");
  r.command = j.at("command");
  for (const auto& c : j.at("cases")) r.cases.push_back(case_from_json(c));
  return r;
}

std::string RunReport::render_text(bool verbose) const {
  std::ostringstream os;
  for (const auto& c : cases) {
    os << (c.pass() ? "[PASS] " : "[FAIL] ");
    if (!c.algebra.empty()) {
      os << c.algebra;
      if (c.m) os << " m=" << *c.m;
      os << " ";
    }
    os << c.title << " (" << c.checks.size() << (c.checks.size() == 1 ? " check)" : " checks)")
       << "\n";
    for (const auto& ch : c.checks) {
      if (!verbose && ch.pass) continue;
      os << "    " << (ch.pass ? "ok   " : "FAIL ") << ch.name << ": " << ch.lhs
         << "  vs  " << ch.rhs << "\n";
    }
  }
  os << "summary: " << passed() << " passed, " << failed() << " failed, " << skipped()
     << " skipped\n";
  for (const auto& cv : caveats()) os << "caveat: " << cv << "\n";
  return os.str();
}

std::string root_combo_str(const RootSystem& rs, const RootCoords& coords) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rs.rank(); ++i) {
    long c = coords[i];
    if (c == 0) continue;
    if (!first && c > 0) os << "+";
    if (c == -1) os << "-";
    else if (c != 1) os << c << "*";
    os << "a" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

const std::array<Algebra, 4> kBig = {Algebra::d4, Algebra::e6, Algebra::e7, Algebra::e8};

} // namespace

std::string tables_markdown() {
  std::ostringstream os;
  os << "# Dual levels l(m)+h^vee\n\n";
  os << "| m | d4 | e6 | e7 | e8 |\n|---|----|----|----|----|\n";
  auto cells = level_table();
  for (int m = 0; m <= 4; ++m) {
    os << "| " << m << " |";
    for (Algebra g : kBig) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const LevelTableCell& c) {
        return c.g == g && c.m == m;
      });
      os << " " << (it == cells.end() ? "" : rat_str(it->ell_plus_hv)) << " |";
    }
    os << "\n";
  }
  for (Algebra g : kBig) {
    const RootSystem& rs = RootSystem::get(g);
    os << "\n# " << rs.id().name() << "\n\n";
    os << "| m | p | y | beta |\n|---|---|---|------|\n";
    for (const CertificateCase& c : certificate_cases()) {
      if (c.g != g) continue;
      AffineRoot beta = case_beta(rs, c);
      os << "| " << c.m << " | " << c.p << " | " << word_str(rs, c.y) << " | y(a"
         << c.beta_from << ") = " << affine_root_str(rs, beta) << " |\n";
    }
    os << "\n2rho = " << root_combo_str(rs, rs.two_rho_roots()) << "\n";
    os << "theta = " << root_combo_str(rs, rs.theta()) << "\n";
  }
  return os.str();
}

std::string tables_json() {
  json j;
  j["levels"] = json::array();
  for (const auto& c : level_table()) {
    j["levels"].push_back(json{{"algebra", AlgebraId{c.g}.name()},
                               {"m", c.m},
                               {"ell_plus_hv", rat_str(c.ell_plus_hv)}});
  }
  j["certificates"] = json::array();
  for (const CertificateCase& c : certificate_cases()) {
    const RootSystem& rs = RootSystem::get(c.g);
    AffineRoot beta = case_beta(rs, c);
    j["certificates"].push_back(json{{"algebra", rs.id().name()},
                                     {"m", c.m},
                                     {"p", c.p},
                                     {"y", word_str(rs, c.y)},
                                     {"beta_from", c.beta_from},
                                     {"beta", affine_root_str(rs, beta)}});
  }
  j["systems"] = json::array();
  for (Algebra g : kBig) {
    const RootSystem& rs = RootSystem::get(g);
    j["systems"].push_back(json{{"algebra", rs.id().name()},
                                {"two_rho", root_combo_str(rs, rs.two_rho_roots())},
                                {"theta", root_combo_str(rs, rs.theta())}});
  }
  return j.dump(2) + "\n";
}

} // namespace walab
