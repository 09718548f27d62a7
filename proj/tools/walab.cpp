// walab: exact-arithmetic verification of the level, central-charge, growth,
// linkage, and integral-root-system certificates for the exceptional series.

#include "walab/growth.hpp"
#include "walab/levels.hpp"
#include "walab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace walab;
using nlohmann::json;

Weight parse_weight(const RootSystem& rs, const std::string& csv) {
  Weight w = rs.zero_weight();
  std::stringstream ss(csv);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= rs.rank()) throw std::invalid_argument("too many coordinates for " + rs.id().name());
    w.fw[i++] = rat_parse(tok);
  }
  if (i != rs.rank()) throw std::invalid_argument("expected " + std::to_string(rs.rank()) +
                                                  " fundamental-weight coordinates");
  return w;
}

int cmd_info(const std::string& algebra, bool as_json) {
  const RootSystem& rs = RootSystem::get(AlgebraId::parse(algebra).value);
  if (as_json) {
    json j{{"algebra", rs.id().name()},
           {"rank", rs.rank()},
           {"coxeter", rs.coxeter()},
           {"dual_coxeter", rs.dual_coxeter()},
           {"dual_dual_coxeter", rs.dual_dual_coxeter()},
           {"lacing", rs.lacing()},
           {"positive_roots", rs.positive_roots().size()},
           {"weyl_order", rs.weyl_order()},
           {"theta", root_combo_str(rs, rs.theta())},
           {"two_rho", root_combo_str(rs, rs.two_rho_roots())}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << rs.id().name() << ": rank " << rs.rank() << ", h = " << rs.coxeter()
            << ", h^vee = " << rs.dual_coxeter() << ", Lh^vee = " << rs.dual_dual_coxeter()
            << ", r^vee = " << rs.lacing() << "\n";
  std::cout << "|Delta_+| = " << rs.positive_roots().size() << ", |W| = " << rs.weyl_order()
            << "\n";
  std::cout << "theta = " << root_combo_str(rs, rs.theta()) << "\n";
  std::cout << "2rho  = " << root_combo_str(rs, rs.two_rho_roots()) << "\n";
  std::cout << "rho^vee pairings (alpha_i|rho^vee) = 1 for all i; (rho|rho^vee) = "
            << rat_str(rs.inner(rs.rho(), rs.rho_check())) << "\n";
  return 0;
}

int cmd_levels(const std::string& algebra, long m, bool as_json) {
  const RootSystem& rs = RootSystem::get(AlgebraId::parse(algebra).value);
  Rat k = k_of_m(rs, m);
  bool critical = (k + rs.dual_coxeter() == 0);
  bool dual_defined = !critical && (k + rs.dual_coxeter() != 1);
  json j{{"algebra", rs.id().name()}, {"m", m}, {"k", rat_str(k)},
         {"k_admissible", is_admissible(rs, k)}};
  if (dual_defined) {
    Rat ell = ff_dual(rs, k);
    j["ell"] = rat_str(ell);
    j["ell_plus_hv"] = rat_str(ell + rs.dual_coxeter());
    j["ell_admissible"] = is_admissible(rs, ell);
    j["cc_principal_at_ell"] = rat_str(principal_cc(rs, ell));
  }
  if (!critical) j["cc_principal_at_k"] = rat_str(principal_cc(rs, k));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << rs.id().name() << " m=" << m << ": k = " << rat_str(k)
            << (is_admissible(rs, k) ? " (admissible)" : " (not admissible)") << "\n";
  if (dual_defined) {
    Rat ell = ff_dual(rs, k);
    std::cout << "dual level l = " << rat_str(ell) << ", l+h^vee = "
              << rat_str(ell + rs.dual_coxeter())
              << (is_admissible(rs, ell) ? " (admissible)" : " (not admissible)") << "\n";
    std::cout << "principal central charge at l: " << rat_str(principal_cc(rs, ell)) << "\n";
  } else {
    std::cout << "dual level undefined at k+h^vee = " << rat_str(k + rs.dual_coxeter()) << "\n";
  }
  if (!critical)
    std::cout << "principal central charge at k: " << rat_str(principal_cc(rs, k)) << "\n";
  return 0;
}

int cmd_linkage(const std::string& algebra, const std::string& k_str, const std::string& lam_str,
                const std::string& mu_str, int depth, long bound) {
  const RootSystem& rs = RootSystem::get(AlgebraId::parse(algebra).value);
  Rat k = rat_parse(k_str);
  if (k + rs.dual_coxeter() == 0) throw std::invalid_argument("critical level");
  Weight lam = parse_weight(rs, lam_str);
  Weight mu = parse_weight(rs, mu_str);
  CentralCharacter chi_hi = central_char_rep(rs, k, lam);
  CentralCharacter chi_lo = central_char_rep(rs, k, mu);
  WprecOptions opts;
  opts.max_depth = depth;
  opts.root_bound = bound;
  auto chain = wprec(rs, k, chi_lo, chi_hi, opts);
  if (!chain) {
    std::cout << "no chain found within depth " << depth << ", delta-coefficient bound " << bound
              << " (bounded-search failure, not a disproof)\n";
    return 1;
  }
  std::cout << "chain certificate for chi(mu) <= chi(lambda), " << chain->steps.size()
            << (chain->steps.size() == 1 ? " step" : " steps") << "\n";
  AffineWeight cur = chain->source;
  AffineWeight rh = rho_hat(rs);
  for (const ChainStep& st : chain->steps) {
    AffineWeight shifted{cur.finite + rh.finite, cur.level + rh.level, cur.degree + rh.degree};
    Rat lhs = 2 * (rs.inner(rs.weight_of_root(st.beta.finite), shifted.finite) +
                   Rat(st.beta.n) * shifted.level);
    Rat rhs = Rat(st.mult) * rs.root_norm2(st.beta.finite);
    std::cout << "  step: beta = " << affine_root_str(rs, st.beta) << ", n = " << st.mult
              << ", 2(beta, .+rho_hat) = " << rat_str(lhs) << " = n(beta|beta) = " << rat_str(rhs)
              << "\n";
    cur.finite = cur.finite - Rat(st.mult) * rs.weight_of_root(st.beta.finite);
    cur.degree = cur.degree - Rat(st.mult) * st.beta.n;
  }
  std::cout << "verified: " << (verify_chain(rs, *chain) ? "yes" : "NO") << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for exceptional-series W-algebra data"};
  app.require_subcommand(1);

  std::string algebra, format = "md", k_str, lam_str, mu_str;
  long m = 0, bound = 12;
  int depth = 3;
  bool as_json = false;

  auto* info = app.add_subcommand("info", "Coxeter data, theta, 2rho, root counts");
  info->add_option("algebra", algebra)->required();
  info->add_flag("--json", as_json);

  auto* levels = app.add_subcommand("levels", "k(m), the dual level, admissibility, central charges");
  levels->add_option("algebra", algebra)->required();
  levels->add_option("--m", m)->required();
  levels->add_flag("--json", as_json);

  auto* tables = app.add_subcommand("tables", "dual-level table and base-certificate data");
  tables->add_option("--format", format)->check(CLI::IsMember({"md", "json"}));

  auto* verify = app.add_subcommand("verify", "run the certificate suite");
  std::string target = "all";
  std::optional<int> m_opt;
  long height_bound = 6, n_bound = 0, root_bound = 0;
  bool verbose = false;
  verify->add_option("target", target, "all or one of a1 a2 g2 d4 f4 e6 e7 e8");
  verify->add_option("--m", m_opt);
  verify->add_option("--depth", depth, "Kac-Kazhdan search depth");
  verify->add_option("--bound", root_bound, "delta-coefficient bound for chain steps");
  verify->add_option("--n-bound", n_bound, "delta-coefficient window for the base check");
  verify->add_option("--height-bound", height_bound, "screening window for the d4 brute force");
  verify->add_flag("--json", as_json);
  verify->add_flag("--verbose", verbose);

  auto* linkage = app.add_subcommand("linkage", "search for a Kac-Kazhdan chain certificate");
  linkage->add_option("algebra", algebra)->required();
  linkage->add_option("--k", k_str, "level as num/den")->required();
  linkage->add_option("--lambda", lam_str, "fundamental-weight coordinates, comma separated")
      ->required();
  linkage->add_option("--mu", mu_str, "fundamental-weight coordinates, comma separated")
      ->required();
  linkage->add_option("--depth", depth);
  linkage->add_option("--bound", bound);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(algebra, as_json);
    if (levels->parsed()) return cmd_levels(algebra, m, as_json);
    if (tables->parsed()) {
      std::cout << (format == "json" ? walab::tables_json() : walab::tables_markdown());
      return 0;
    }
    if (verify->parsed()) {
      walab::VerifyOptions opts;
      if (target != "all") opts.algebra = walab::AlgebraId::parse(target).value;
      if (m_opt) opts.m = *m_opt;
      opts.kk_depth = depth;
      opts.root_bound = root_bound;
      opts.n_bound = n_bound;
      opts.height_bound = height_bound;
      walab::RunReport report = walab::run_verification(opts);
      std::cout << (as_json ? report.to_json() : report.render_text(verbose));
      return report.failed() == 0 ? 0 : 1;
    }
    if (linkage->parsed()) return cmd_linkage(algebra, k_str, lam_str, mu_str, depth, bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
