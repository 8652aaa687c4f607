#pragma once

#include "detvar/errors.hpp"

#include <string>

namespace detvar {

/// Validates 1 <= n <= m and min_k <= k <= n - 1 for tau_{m,n,k} in P^{mn-1}.
inline void require_parameters(int m, int n, int k, int min_k = 1) {
  auto where = [&] {
    return "(m,n,k) = (" + std::to_string(m) + "," + std::to_string(n) + "," +
           std::to_string(k) + ")";
  };
  if (n < 1 || m < n)
    throw DomainError("need 1 <= n <= m, got " + where());
  if (k < min_k || k > n - 1)
    throw DomainError("need " + std::to_string(min_k) + " <= k <= n-1, got " + where());
}

/// N = mn - 1
inline int ambient_dimension(int m, int n) { return m * n - 1; }

/// dim tau_{m,n,k} = (m + k)(n - k) - 1
inline int variety_dimension(int m, int n, int k) { return (m + k) * (n - k) - 1; }

inline int variety_codimension(int m, int n, int k) {
  return ambient_dimension(m, n) - variety_dimension(m, n, k);
}

} // namespace detvar
