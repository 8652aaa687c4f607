#pragma once

#include "detvar/determinantal.hpp"
#include "detvar/errors.hpp"
#include "detvar/int_matrix.hpp"
#include "detvar/integer.hpp"
#include "detvar/proj_class.hpp"
#include "detvar/schubert.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace detvar {

/// B_{i,p}(m,n,k) = binom(m(n-k) - p, i - p).
inline IntMatrix b_matrix(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  const int size = m * (n - k) + 1;
  IntMatrix b(size, size);
  for (int i = 0; i < size; ++i)
    for (int p = 0; p <= i; ++p) b(i, p) = binomial(m * (n - k) - p, i - p);
  return b;
}

namespace detail {

// gamma_l = sum over i, j, p with mk + j - p = l of A_{i,p} B_{j,i}; H^{N+1} = 0.
inline ProjClass cm_closed_sum(int m, int n, int k) {
  const int N = ambient_dimension(m, n);
  const int size = m * (n - k) + 1;
  const IntMatrix a = a_matrix(m, n, k);
  const IntMatrix b = b_matrix(m, n, k);
  std::vector<Integer> gamma(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i < size; ++i)
    for (int p = 0; p < size; ++p) {
      const Integer& aip = a(i, p);
      if (aip == 0) continue;
      for (int j = i; j < size; ++j) {
        const int l = m * k + j - p;
        if (l > N) continue;
        if (l < 0)
          throw ConsistencyError("negative power of H in the trace formula at (i,p,j) = (" +
                                 std::to_string(i) + "," + std::to_string(p) + "," +
                                 std::to_string(j) + ")");
        gamma[static_cast<std::size_t>(l)] += aip * b(j, i);
      }
    }
  return ProjClass::from_h_powers(gamma);
}

inline ProjClass smooth_ambient_class(int m, int n) {
  const int N = ambient_dimension(m, n);
  ProjClass c(N);
  for (int l = 0; l <= N; ++l) c[l] = binomial(m * n, l + 1);
  return c;
}

struct CmCache {
  std::shared_mutex mutex;
  std::map<std::tuple<int, int, int>, ProjClass> entries;
};

inline CmCache& cm_cache() {
  static CmCache cache;
  return cache;
}

} // namespace detail

/// Chern-Mather class of tau_{m,n,k} on the [P^l] basis. k = 0 is P^{mn-1} itself.
inline ProjClass cm_class(int m, int n, int k) {
  require_parameters(m, n, k, 0);
  if (k == 0) return detail::smooth_ambient_class(m, n);
  auto& cache = detail::cm_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find({m, n, k});
    if (it != cache.entries.end()) return it->second;
  }
  ProjClass c = detail::cm_closed_sum(m, n, k);
  std::unique_lock lock(cache.mutex);
  return cache.entries.try_emplace({m, n, k}, std::move(c)).first->second;
}

inline std::map<std::tuple<int, int, int>, ProjClass> cm_cache_snapshot() {
  auto& cache = detail::cm_cache();
  std::shared_lock lock(cache.mutex);
  return cache.entries;
}

/// Existing entries win.
inline void cm_cache_seed(int m, int n, int k, ProjClass c) {
  require_parameters(m, n, k, 1);
  if (c.ambient_dim() != ambient_dimension(m, n))
    throw ContractViolation("seeded class has the wrong ambient dimension");
  auto& cache = detail::cm_cache();
  std::unique_lock lock(cache.mutex);
  cache.entries.try_emplace({m, n, k}, std::move(c));
}

inline void cm_cache_clear() {
  auto& cache = detail::cm_cache();
  std::unique_lock lock(cache.mutex);
  cache.entries.clear();
}

/// trace(A * H * B) with H = [H^{mk+j-i}], multiplied out entry by entry over
/// Laurent polynomials in H. Cross-check for cm_class.
inline ProjClass cm_class_trace(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  using Laurent = std::map<int, Integer>;
  const int N = ambient_dimension(m, n);
  const int size = m * (n - k) + 1;
  const IntMatrix a = a_matrix(m, n, k);
  const IntMatrix b = b_matrix(m, n, k);

  std::vector<Laurent> ah(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  auto at = [size](std::vector<Laurent>& v, int i, int j) -> Laurent& {
    return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int p = 0; p < size; ++p)
        if (a(i, p) != 0) at(ah, i, j)[m * k + j - p] += a(i, p);

  Laurent trace;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (b(j, i) == 0) continue;
      for (const auto& [e, c] : at(ah, i, j)) trace[e] += c * b(j, i);
    }

  std::vector<Integer> gamma(static_cast<std::size_t>(N) + 1);
  for (const auto& [e, c] : trace) {
    if (c == 0) continue;
    if (e < 0)
      throw ConsistencyError("trace(A H B) has a nonzero H^" + std::to_string(e) + " term");
    if (e <= N) gamma[static_cast<std::size_t>(e)] = c;
  }
  return ProjClass::from_h_powers(gamma);
}

/// gamma_l = trace(alpha^l B), one alpha matrix per l.
inline ProjClass cm_class_alpha(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  const int N = ambient_dimension(m, n);
  const int size = m * (n - k) + 1;
  const IntMatrix b = b_matrix(m, n, k);
  std::vector<Integer> gamma(static_cast<std::size_t>(N) + 1);
  for (int l = 0; l <= N; ++l) {
    const IntMatrix alpha = alpha_matrix(m, n, k, l);
    for (int i = 0; i < size; ++i)
      for (int p = 0; p < size; ++p) gamma[static_cast<std::size_t>(l)] += alpha(i, p) * b(p, i);
  }
  return ProjClass::from_h_powers(gamma);
}

/// c_SM(tau_{m,n,k}) = sum_i (-1)^i binom(k+i-1, k-1) c_M(tau_{m,n,k+i}).
inline ProjClass csm_class(int m, int n, int k) {
  require_parameters(m, n, k, 0);
  if (k == 0) return cm_class(m, n, 0);
  ProjClass out(ambient_dimension(m, n));
  for (int i = 0; i <= n - 1 - k; ++i)
    out += Integer(sign_power(i) * binomial(k + i - 1, k - 1)) * cm_class(m, n, k + i);
  return out;
}

/// c_SM of the open stratum: sum_i (-1)^i binom(k+i, k) c_M(tau_{m,n,k+i}).
inline ProjClass csm_open(int m, int n, int k) {
  require_parameters(m, n, k, 0);
  ProjClass out(ambient_dimension(m, n));
  for (int i = 0; i <= n - 1 - k; ++i)
    out += Integer(sign_power(i) * binomial(k + i, k)) * cm_class(m, n, k + i);
  return out;
}

/// Eu_{tau_{m,n,k}} on the stratum k+i is binom(k+i, i).
inline StrataVector euler_obstruction(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  StrataVector eu(k, n - 1);
  for (int i = 0; i <= n - 1 - k; ++i) eu[k + i] = binomial(k + i, i);
  return eu;
}

/// Upper triangular [binom(k+b, k+a)]_{a,b}: c_M of the closures in terms of c_SM
/// of the open strata k..n-1.
inline IntMatrix stratum_change_matrix(int n, int k) {
  if (k < 0 || k > n - 1) throw DomainError("need 0 <= k <= n-1");
  const int size = n - k;
  IntMatrix e(size, size);
  for (int a = 0; a < size; ++a)
    for (int b = a; b < size; ++b) e(a, b) = binomial(k + b, k + a);
  return e;
}

/// Inverse of stratum_change_matrix: entries (-1)^{b-a} binom(k+b, k+a).
inline IntMatrix stratum_change_inverse(int n, int k) {
  IntMatrix e = stratum_change_matrix(n, k);
  for (int a = 0; a < e.rows(); ++a)
    for (int b = a; b < e.cols(); ++b) e(a, b) *= sign_power(b - a);
  return e;
}

/// c_F of the determinant hypersurface: nH (1+H)^{n^2} / (1 + nH) mod H^{n^2},
/// the division done with the truncated geometric series.
inline ProjClass chern_fulton_hypersurface(int n) {
  if (n < 2) throw DomainError("chern_fulton_hypersurface needs n >= 2");
  const int N = n * n - 1;
  std::vector<Integer> series(static_cast<std::size_t>(N) + 1);
  Integer power = 1;
  for (int i = 0; i <= N; ++i) {
    series[static_cast<std::size_t>(i)] = power;
    power *= -n;
  }
  std::vector<Integer> gamma(static_cast<std::size_t>(N) + 1);
  for (int a = 0; a + 1 <= N; ++a) { // nH * H^a from (1+H)^{n^2}
    const Integer lead = n * binomial(n * n, a);
    for (int i = 0; a + 1 + i <= N; ++i)
      gamma[static_cast<std::size_t>(a + 1 + i)] += lead * series[static_cast<std::size_t>(i)];
  }
  return ProjClass::from_h_powers(gamma);
}

/// (-1)^{n^2-2} (c_F - c_SM) for tau_{n,n,1}.
inline ProjClass milnor_class(int n) {
  if (n < 2) throw DomainError("milnor_class needs n >= 2");
  return Integer(sign_power(n * n - 2)) * (chern_fulton_hypersurface(n) - csm_class(n, n, 1));
}

} // namespace detvar
