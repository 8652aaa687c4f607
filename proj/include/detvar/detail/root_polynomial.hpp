#pragma once

#include "detvar/errors.hpp"
#include "detvar/integer.hpp"
#include "detvar/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

// Polynomials in the Chern roots x_1..x_k of S^dual on G(k, n). A symmetric
// polynomial P maps to the Chow ring through sigma_lambda = s_lambda(x), and its
// Schur coefficients are read off the bialternant P * prod_{i<j}(x_i - x_j).

namespace detvar::detail {

class RootPolynomial {
public:
  static constexpr int kMaxVariables = 8;
  using Key = std::uint64_t; // 8 bits per exponent

  RootPolynomial(int variables, int max_degree)
      : vars_(variables), max_degree_(max_degree) {
    if (variables < 1 || variables > kMaxVariables)
      throw ContractViolation("root polynomial supports 1.." +
                              std::to_string(kMaxVariables) + " variables");
    if (max_degree > 255) throw ContractViolation("root polynomial degree bound too large");
  }

  static RootPolynomial constant(int variables, int max_degree, const Integer& c) {
    RootPolynomial p(variables, max_degree);
    p.add(0, c);
    return p;
  }

  /// (1 + x_var)^e
  static RootPolynomial one_plus_root_power(int variables, int max_degree, int var, int e) {
    RootPolynomial p(variables, max_degree);
    for (int j = 0; j <= std::min(e, max_degree); ++j)
      p.add(Key{static_cast<Key>(j)} << (8 * var), binomial(e, j));
    return p;
  }

  /// Complete homogeneous symmetric polynomial h_s(x_1..x_vars).
  static RootPolynomial complete_homogeneous(int variables, int max_degree, int s) {
    RootPolynomial p(variables, max_degree);
    if (s > max_degree) return p;
    std::vector<int> e(static_cast<std::size_t>(variables), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
      if (var == variables - 1) {
        e[static_cast<std::size_t>(var)] = remaining;
        p.add(pack(e), 1);
        return;
      }
      for (int a = 0; a <= remaining; ++a) {
        e[static_cast<std::size_t>(var)] = a;
        self(self, var + 1, remaining - a);
      }
    };
    rec(rec, 0, s);
    return p;
  }

  void add(Key key, const Integer& c) {
    if (c == 0 || degree(key) > max_degree_) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  RootPolynomial& operator+=(const RootPolynomial& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }

  friend RootPolynomial operator*(const RootPolynomial& a, const RootPolynomial& b) {
    if (a.vars_ != b.vars_) throw ContractViolation("root polynomial variable mismatch");
    RootPolynomial out(a.vars_, std::min(a.max_degree_, b.max_degree_));
    for (const auto& [ka, ca] : a.terms_) {
      int da = degree(ka);
      for (const auto& [kb, cb] : b.terms_)
        if (da + degree(kb) <= out.max_degree_) out.add(ka + kb, ca * cb);
    }
    return out;
  }

  Integer coefficient(const std::vector<int>& exponents) const {
    for (int e : exponents)
      if (e < 0 || e > 255) return 0;
    auto it = terms_.find(pack(exponents));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  int variables() const { return vars_; }

  static Key pack(const std::vector<int>& e) {
    Key k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<Key>(e[i]) << (8 * i);
    return k;
  }

  static int degree(Key k) {
    int d = 0;
    for (; k; k >>= 8) d += static_cast<int>(k & 0xff);
    return d;
  }

private:
  int vars_;
  int max_degree_;
  std::unordered_map<Key, Integer> terms_;
};

/// Schur expansion of a symmetric polynomial in box.rows roots, restricted to
/// partitions inside the box (the others lie in the ideal of the Grassmannian).
inline std::map<Partition, Integer> schur_coefficients(const RootPolynomial& p, const Box& box) {
  const int k = box.rows;
  if (p.variables() != k) throw ContractViolation("root count does not match box rows");

  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> signed_deltas; // w(delta), sgn(w)
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    std::vector<int> wd(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) wd[static_cast<std::size_t>(i)] = k - 1 - perm[static_cast<std::size_t>(i)];
    signed_deltas.emplace_back(std::move(wd), sign_power(inversions));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<Partition, Integer> out;
  std::vector<int> exps(static_cast<std::size_t>(k));
  for (const Partition& lambda : partitions_in_box(box)) {
    Integer c = 0;
    for (const auto& [wd, sgn] : signed_deltas) {
      for (int i = 0; i < k; ++i) {
        auto ui = static_cast<std::size_t>(i);
        exps[ui] = lambda[ui] + (k - 1 - i) - wd[ui];
      }
      Integer t = p.coefficient(exps);
      if (sgn > 0) c += t; else c -= t;
    }
    if (c != 0) out.emplace(lambda, std::move(c));
  }
  return out;
}

} // namespace detvar::detail
