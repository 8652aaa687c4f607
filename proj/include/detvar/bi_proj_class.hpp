#pragma once

#include "detvar/errors.hpp"
#include "detvar/integer.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace detvar {

/// Class of dimension N in P^N x P^N: sum of c_j h1^{N+1-j} h2^j. Monomials with
/// an exponent above N vanish, so only j = 1..N is stored.
class BiProjClass {
public:
  BiProjClass() = default;
  explicit BiProjClass(int ambient_dim) : n_(ambient_dim), coeffs_(checked(ambient_dim)) {}

  int ambient_dim() const { return n_; }

  /// Coefficient of h1^a h2^b, a + b = N + 1.
  Integer coefficient(int a, int b) const {
    require_bidegree(a, b);
    if (b < 1 || b > n_) return 0;
    return coeffs_[static_cast<std::size_t>(b - 1)];
  }

  void add(int a, int b, const Integer& c) {
    require_bidegree(a, b);
    if (c == 0) return;
    if (b < 1 || b > n_)
      throw ContractViolation("h1^" + std::to_string(a) + " h2^" + std::to_string(b) +
                              " is zero in P^" + std::to_string(n_) + " x P^" + std::to_string(n_));
    coeffs_[static_cast<std::size_t>(b - 1)] += c;
  }

  /// Coefficients ordered by descending h1 exponent: h1^N h2, ..., h1 h2^N.
  const std::vector<Integer>& by_h2_exponent() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  BiProjClass& operator+=(const BiProjClass& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BiProjClass& operator-=(const BiProjClass& o) {
    require_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  BiProjClass& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend BiProjClass operator+(BiProjClass a, const BiProjClass& b) { return a += b; }
  friend BiProjClass operator-(BiProjClass a, const BiProjClass& b) { return a -= b; }
  friend BiProjClass operator-(BiProjClass a) { return a *= -1; }
  friend BiProjClass operator*(const Integer& s, BiProjClass a) { return a *= s; }

  friend bool operator==(const BiProjClass&, const BiProjClass&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BiProjClass& x) {
    os << "[h1^" << x.n_ << "h2..: ";
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) os << (i ? "," : "") << x.coeffs_[i];
    return os << ']';
  }

private:
  static std::size_t checked(int n) {
    if (n < 1) throw ContractViolation("BiProjClass needs N >= 1");
    return static_cast<std::size_t>(n);
  }
  void require_bidegree(int a, int b) const {
    if (a < 0 || b < 0 || a + b != n_ + 1)
      throw ContractViolation("bidegree (" + std::to_string(a) + "," + std::to_string(b) +
                              ") does not sum to " + std::to_string(n_ + 1));
  }
  void require_same(const BiProjClass& o) const {
    if (n_ != o.n_) throw ContractViolation("cycles in different products");
  }

  int n_ = 0;
  std::vector<Integer> coeffs_;
};

/// Swaps the roles of h1 and h2.
inline BiProjClass dagger(const BiProjClass& x) {
  const int n = x.ambient_dim();
  BiProjClass out(n);
  for (int b = 1; b <= n; ++b) out.add(b, n + 1 - b, x.coefficient(n + 1 - b, b));
  return out;
}

} // namespace detvar
