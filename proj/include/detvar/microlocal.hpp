#pragma once

#include "detvar/bi_proj_class.hpp"
#include "detvar/determinantal.hpp"
#include "detvar/errors.hpp"
#include "detvar/int_matrix.hpp"
#include "detvar/lagrangian.hpp"
#include "detvar/proj_class.hpp"

#include <string>

namespace detvar {

/// chi_j = sum_i e(j,i) r_i over strata 0..n-1, with e unit lower triangular.
struct IndexSystem {
  StrataVector chi;
  IntMatrix e;

  void validate() const {
    const int size = chi.hi() - chi.lo() + 1;
    if (chi.lo() != 0) throw ContractViolation("index system strata must start at 0");
    if (e.rows() != size || e.cols() != size)
      throw ContractViolation("obstruction matrix is " + std::to_string(e.rows()) + "x" +
                              std::to_string(e.cols()) + ", expected " + std::to_string(size));
    for (int j = 0; j < size; ++j) {
      if (e(j, j) != 1) throw ContractViolation("obstruction matrix needs a unit diagonal");
      for (int i = j + 1; i < size; ++i)
        if (e(j, i) != 0) throw ContractViolation("obstruction matrix must be lower triangular");
    }
  }
};

/// chi_j = binom(j, k): Euler characteristic of the Tjurina fibre over the stratum j.
inline StrataVector stalk_euler(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  StrataVector chi(0, n - 1);
  for (int j = 0; j <= n - 1; ++j) chi[j] = binomial(j, k);
  return chi;
}

/// e(j,i) = Eu of the closure of stratum i along stratum j = binom(j, i).
inline IntMatrix obstruction_matrix(int n) {
  if (n < 1) throw DomainError("obstruction_matrix needs n >= 1");
  IntMatrix e(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) e(j, i) = binomial(j, i);
  return e;
}

inline IntMatrix obstruction_matrix_inverse(int n) {
  IntMatrix e = obstruction_matrix(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) e(j, i) *= sign_power(j - i);
  return e;
}

inline IndexSystem determinantal_index_system(int m, int n, int k) {
  return IndexSystem{stalk_euler(m, n, k), obstruction_matrix(n)};
}

/// Forward substitution, exact.
inline StrataVector solve_multiplicities(const IndexSystem& sys) {
  sys.validate();
  const int size = sys.chi.hi() + 1;
  StrataVector r(0, size - 1);
  for (int j = 0; j < size; ++j) {
    Integer v = sys.chi[j];
    for (int i = 0; i < j; ++i) v -= sys.e(j, i) * r[i];
    r[j] = v;
  }
  return r;
}

/// sum_i r_i Con(tau_{m,n,i}); must be Con(tau_{m,n,k}). Stratum 0 is the ambient
/// space, whose projectivized conormal space is empty.
inline BiProjClass ic_char_cycle(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  const StrataVector r = solve_multiplicities(determinantal_index_system(m, n, k));
  BiProjClass cc(ambient_dimension(m, n));
  for (int i = 1; i <= n - 1; ++i)
    if (r[i] != 0) cc += r[i] * conormal(m, n, i);
  if (!(cc == conormal(m, n, k)))
    throw ConsistencyError("IC characteristic cycle of tau_{" + std::to_string(m) + "," +
                           std::to_string(n) + "," + std::to_string(k) + "} is not its conormal cycle");
  return cc;
}

} // namespace detvar
