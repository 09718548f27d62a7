#pragma once

#include "walab/report.hpp"

#include <optional>

namespace walab {

struct VerifyOptions {
  std::optional<Algebra> algebra; // nullopt = everything
  std::optional<int> m;           // nullopt = all certified m for the algebra
  int kk_depth = 3;      // chain-search depth for the screening
  long root_bound = 0;   // 0 = per-case default 2p
  long n_bound = 0;      // 0 = per-case default 2p
  long height_bound = 6; // exhaustive h-positivity screening window (d4)
};

/// Runs the full certificate suite: dual levels, central charges, growth
/// identities, base certificates, cone condition, exclusion, and the d4
/// exhaustive screening. Failures are report content, not errors.
RunReport run_verification(const VerifyOptions& opts);

} // namespace walab
