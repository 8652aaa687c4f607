#pragma once

#include "detvar/bi_proj_class.hpp"
#include "detvar/classes.hpp"
#include "detvar/determinantal.hpp"
#include "detvar/errors.hpp"
#include "detvar/proj_class.hpp"

#include <string>
#include <vector>

namespace detvar {

/// ch of the constructible function whose c_* is c (on the [P^l] basis):
/// sum_j sum_{k=j-1}^{N-1} (-1)^k c[P^k] binom(k+1, j) h1^{N+1-j} h2^j.
inline BiProjClass ch_from_class(const ProjClass& c) {
  const int n = c.ambient_dim();
  BiProjClass out(n);
  for (int j = 1; j <= n; ++j) {
    Integer s = 0;
    for (int k = j - 1; k <= n - 1; ++k)
      if (c[k] != 0) s += sign_power(k) * c[k] * binomial(k + 1, j);
    out.add(n + 1 - j, j, s);
  }
  return out;
}

/// Projectivized conormal cycle, (-1)^{dim} ch(c_M). Coefficients are polar degrees.
inline BiProjClass conormal(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  BiProjClass con = Integer(sign_power(variety_dimension(m, n, k))) * ch_from_class(cm_class(m, n, k));
  const int codim = variety_codimension(m, n, k);
  const int top = ambient_dimension(m, n);
  for (int b = 1; b <= top; ++b) {
    const Integer c = con.coefficient(top + 1 - b, b);
    if (c < 0 || (c != 0 && top + 1 - b < codim))
      throw ConsistencyError("Con(tau_{" + std::to_string(m) + "," + std::to_string(n) + "," +
                             std::to_string(k) + "}) has coefficient " + to_decimal(c) +
                             " at h1^" + std::to_string(top + 1 - b) + " h2^" + std::to_string(b));
  }
  return con;
}

namespace detail {

template <class Weight>
BiProjClass signed_conormal_sum(int m, int n, int k, Weight weight) {
  BiProjClass out(ambient_dimension(m, n));
  for (int i = 0; i <= n - 1 - k; ++i) {
    Integer w = sign_power(i + variety_dimension(m, n, k + i)) * weight(i);
    if (w != 0) out += w * conormal(m, n, k + i);
  }
  return out;
}

} // namespace detail

/// Ch(tau_{m,n,k}) = sum_i (-1)^{i + dim tau_{k+i}} binom(k+i-1, k-1) Con(tau_{k+i}) = ch(c_SM).
inline BiProjClass charcycle(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  return detail::signed_conormal_sum(m, n, k, [k](int i) { return binomial(k + i - 1, k - 1); });
}

/// Ch of the open stratum, with binom(k+i, k) weights.
inline BiProjClass charcycle_open(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  return detail::signed_conormal_sum(m, n, k, [k](int i) { return binomial(k + i, k); });
}

struct PolarDegrees {
  std::vector<Integer> values; // delta_0 .. delta_d
  friend bool operator==(const PolarDegrees&, const PolarDegrees&) = default;
};

/// deg [M_l] = sum_{i<=l} (-1)^i binom(d-i+1, d-l+1) beta_{d-i}, beta_j = c_M[P^j].
inline std::vector<Integer> piene_polar_degrees(const ProjClass& cm, int d) {
  std::vector<Integer> out(static_cast<std::size_t>(d) + 1);
  for (int l = 0; l <= d; ++l)
    for (int i = 0; i <= l; ++i)
      out[static_cast<std::size_t>(l)] += sign_power(i) * binomial(d - i + 1, d - l + 1) * cm[d - i];
  return out;
}

/// delta_l read off Con at h1^{codim+l} h2^{mn-codim-l}, checked against Piene's formula.
inline PolarDegrees polar_degrees(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  const int d = variety_dimension(m, n, k);
  const int codim = variety_codimension(m, n, k);
  const int mn = m * n;
  const BiProjClass con = conormal(m, n, k);
  PolarDegrees out;
  for (int l = 0; l <= d; ++l) out.values.push_back(con.coefficient(codim + l, mn - codim - l));

  auto piene = piene_polar_degrees(cm_class(m, n, k), d);
  if (piene != out.values)
    throw ConsistencyError("polar degrees of tau_{" + std::to_string(m) + "," + std::to_string(n) +
                           "," + std::to_string(k) + "} disagree between Con and Piene's formula");
  return out;
}

/// The closed double sum over beta for gED(tau_{m,n,k}), D = (m+k)(n-k).
inline Integer ged_closed_sum(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  const int big = (m + k) * (n - k);
  const ProjClass beta = cm_class(m, n, k);
  Integer total = 0;
  for (int l = 0; l <= big - 1; ++l)
    for (int i = 0; i <= l; ++i) total += sign_power(i) * binomial(big - i, big - l) * beta[big - 1 - i];
  return total;
}

/// Generic Euclidean distance degree: sum of the polar degrees.
inline Integer ged(int m, int n, int k) {
  Integer total = 0;
  for (const auto& d : polar_degrees(m, n, k).values) total += d;
  Integer closed = ged_closed_sum(m, n, k);
  if (closed != total)
    throw ConsistencyError("gED(tau_{" + std::to_string(m) + "," + std::to_string(n) + "," +
                           std::to_string(k) + "}): polar sum " + to_decimal(total) +
                           " != closed sum " + to_decimal(closed));
  return total;
}

/// J_N(p) = p(-1-t) - p(-1)((1+t)^{N+1} - t^{N+1}); p has degree <= N, coefficients by power of t.
inline std::vector<Integer> jn_involution(const std::vector<Integer>& p, int n) {
  if (n < 0 || static_cast<int>(p.size()) > n + 1)
    throw ContractViolation("J_N needs a polynomial of degree <= N");
  std::vector<Integer> out(static_cast<std::size_t>(n) + 2);
  Integer at_minus_one = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int e = static_cast<int>(i);
    at_minus_one += sign_power(e) * p[i];
    // (-1-t)^e = (-1)^e (1+t)^e
    for (int j = 0; j <= e; ++j) out[static_cast<std::size_t>(j)] += sign_power(e) * p[i] * binomial(e, j);
  }
  for (int j = 0; j <= n + 1; ++j) out[static_cast<std::size_t>(j)] -= at_minus_one * binomial(n + 1, j);
  out[static_cast<std::size_t>(n) + 1] += at_minus_one;
  if (out.back() != 0) throw ConsistencyError("J_N produced a t^{N+1} term");
  out.pop_back();
  return out;
}

struct DualClass {
  ProjClass cm;
  int dimension = -1;
};

/// c_M of the dual variety from c = c_M(X), dim X = dim_x.
inline DualClass dual_cm(const ProjClass& c, int dim_x) {
  const int n = c.ambient_dim();
  if (c[n] != 0) throw ContractViolation("dual_cm needs a proper subvariety (no [P^N] term)");
  std::vector<Integer> q = (Integer(sign_power(dim_x)) * c).h_powers();
  ProjClass image = ProjClass::from_h_powers(jn_involution(q, n));
  DualClass out;
  out.dimension = image.dimension();
  if (out.dimension < 0) throw ConsistencyError("dual variety has zero Chern-Mather class");
  out.cm = Integer(sign_power(out.dimension)) * image;
  if (out.cm[out.dimension] <= 0)
    throw ConsistencyError("dual class has nonpositive degree " + to_decimal(out.cm[out.dimension]));
  return out;
}

struct SymmetryItem {
  std::string identity;
  bool holds = false;
};

struct SymmetryReport {
  int m = 0, n = 0;
  std::vector<SymmetryItem> items;
  bool all_hold() const {
    for (const auto& i : items)
      if (!i.holds) return false;
    return true;
  }
};

/// Ch(tau_{m,n,1}) = -Ch^dagger when m even and n odd, +Ch^dagger otherwise; and
/// sum_{i>=k} binom(i,k) Ch(tau_i^o) = (-1)^{mn} (sum_{i>=n-k} binom(i,n-k) Ch(tau_i^o))^dagger
/// for each k. Both sides are (-1)^{dim} Con of dual varieties, whose dimensions
/// differ in parity by mn, so the sign is + only for mn even.
inline SymmetryReport symmetry_check(int m, int n) {
  if (n < 2 || m < n) throw DomainError("symmetry_check needs 2 <= n <= m");
  SymmetryReport report{m, n, {}};
  const bool anti = m % 2 == 0 && n % 2 == 1;
  const BiProjClass ch1 = charcycle(m, n, 1);
  report.items.push_back({std::string("Ch(tau_1) = ") + (anti ? "-" : "+") + "Ch(tau_1)^dagger",
                          ch1 == Integer(anti ? -1 : 1) * dagger(ch1)});

  std::vector<BiProjClass> open;
  for (int i = 1; i <= n - 1; ++i) open.push_back(charcycle_open(m, n, i));
  auto weighted = [&](int k) {
    BiProjClass s(ambient_dimension(m, n));
    for (int i = k; i <= n - 1; ++i) s += binomial(i, k) * open[static_cast<std::size_t>(i - 1)];
    return s;
  };
  const int flip = sign_power(m * n);
  for (int k = 1; k <= n - 1; ++k)
    report.items.push_back({"sum binom(i," + std::to_string(k) + ") Ch(tau_i^o) = " +
                                (flip < 0 ? "-" : "+") + "dagger of sum binom(i," +
                                std::to_string(n - k) + ") Ch(tau_i^o)",
                            weighted(k) == Integer(flip) * dagger(weighted(n - k))});
  return report;
}

} // namespace detvar
