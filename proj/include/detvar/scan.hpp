#pragma once

#include "detvar/classes.hpp"
#include "detvar/errors.hpp"

#include <string>
#include <vector>

namespace detvar {

struct ConjectureViolation {
  int m = 0, n = 0, k = 0, l = 0;
  Integer coefficient; // copied from csm_open
  friend bool operator==(const ConjectureViolation&, const ConjectureViolation&) = default;
};

struct ScanReport {
  int m_max = 0, n_max = 0;
  std::vector<ConjectureViolation> effectivity_violations;
  std::vector<ConjectureViolation> vanishing_violations;
  long long instances_checked = 0;
};

/// Checks eta_l(m,n,k) = c_SM(tau^o_{m,n,k})[P^l] >= 0 for all l, and = 0 for l <= n-k-2,
/// over 2 <= n <= m <= m_max, n <= n_max, 1 <= k <= n-1.
inline ScanReport scan_conjectures(int m_max, int n_max) {
  if (n_max < 2 || m_max < n_max) throw DomainError("scan needs 2 <= n_max <= m_max");
  ScanReport report{m_max, n_max, {}, {}, 0};
  for (int m = 2; m <= m_max; ++m)
    for (int n = 2; n <= std::min(m, n_max); ++n)
      for (int k = 1; k <= n - 1; ++k) {
        const ProjClass eta = csm_open(m, n, k);
        for (int l = 0; l <= eta.ambient_dim(); ++l) {
          if (eta[l] < 0) report.effectivity_violations.push_back({m, n, k, l, eta[l]});
          if (l <= n - k - 2 && eta[l] != 0) report.vanishing_violations.push_back({m, n, k, l, eta[l]});
        }
        ++report.instances_checked;
      }
  return report;
}

} // namespace detvar
