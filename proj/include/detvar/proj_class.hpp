#pragma once

#include "detvar/errors.hpp"
#include "detvar/integer.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace detvar {

/// Class in A_*(P^N), stored little-endian: coefficient l multiplies [P^l].
class ProjClass {
public:
  ProjClass() = default;
  explicit ProjClass(int ambient_dim) : coeffs_(checked_length(ambient_dim)) {}

  static ProjClass from_coefficients(std::vector<Integer> coeffs) {
    if (coeffs.empty()) throw ContractViolation("ProjClass needs at least [P^0]");
    ProjClass x;
    x.coeffs_ = std::move(coeffs);
    return x;
  }

  /// gamma[e] is the coefficient of H^e = [P^{N-e}]. The only place the two
  /// indexings meet.
  static ProjClass from_h_powers(const std::vector<Integer>& gamma) {
    if (gamma.empty()) throw ContractViolation("ProjClass needs at least H^0");
    const int n = static_cast<int>(gamma.size()) - 1;
    ProjClass x(n);
    for (int e = 0; e <= n; ++e) x.coeffs_[static_cast<std::size_t>(n - e)] = gamma[static_cast<std::size_t>(e)];
    return x;
  }

  std::vector<Integer> h_powers() const {
    const int n = ambient_dim();
    std::vector<Integer> gamma(coeffs_.size());
    for (int l = 0; l <= n; ++l) gamma[static_cast<std::size_t>(n - l)] = coeffs_[static_cast<std::size_t>(l)];
    return gamma;
  }

  int ambient_dim() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  const Integer& operator[](int l) const { return coeffs_.at(static_cast<std::size_t>(l)); }
  Integer& operator[](int l) { return coeffs_.at(static_cast<std::size_t>(l)); }

  /// Largest l with a nonzero [P^l] coefficient; -1 for the zero class.
  int dimension() const {
    for (int l = ambient_dim(); l >= 0; --l)
      if (coeffs_[static_cast<std::size_t>(l)] != 0) return l;
    return -1;
  }
  bool is_zero() const { return dimension() < 0; }

  ProjClass& operator+=(const ProjClass& other) {
    require_same_ambient(other);
    for (std::size_t l = 0; l < coeffs_.size(); ++l) coeffs_[l] += other.coeffs_[l];
    return *this;
  }
  ProjClass& operator-=(const ProjClass& other) {
    require_same_ambient(other);
    for (std::size_t l = 0; l < coeffs_.size(); ++l) coeffs_[l] -= other.coeffs_[l];
    return *this;
  }
  ProjClass& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend ProjClass operator+(ProjClass a, const ProjClass& b) { return a += b; }
  friend ProjClass operator-(ProjClass a, const ProjClass& b) { return a -= b; }
  friend ProjClass operator-(ProjClass a) { return a *= -1; }
  friend ProjClass operator*(const Integer& s, ProjClass a) { return a *= s; }

  /// H^e * x: [P^l] goes to [P^{l-e}], classes below P^0 drop out.
  ProjClass times_h_power(int e) const {
    if (e < 0) throw ContractViolation("negative power of H");
    ProjClass out(ambient_dim());
    for (int l = e; l <= ambient_dim(); ++l)
      out.coeffs_[static_cast<std::size_t>(l - e)] = coeffs_[static_cast<std::size_t>(l)];
    return out;
  }

  friend bool operator==(const ProjClass&, const ProjClass&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ProjClass& x) {
    os << '[';
    for (std::size_t l = 0; l < x.coeffs_.size(); ++l) os << (l ? "," : "") << x.coeffs_[l];
    return os << ']';
  }

  /// "3H^4 + 2H^8" style rendering in H powers.
  std::string to_h_string() const {
    std::string out;
    auto gamma = h_powers();
    for (std::size_t e = 0; e < gamma.size(); ++e) {
      if (gamma[e] == 0) continue;
      Integer c = gamma[e];
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      if (c < 0) c = -c;
      if (c != 1 || e == 0) out += to_decimal(c);
      if (e >= 1) out += "H";
      if (e >= 2) out += "^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
  }

  void require_same_ambient(const ProjClass& other) const {
    if (coeffs_.size() != other.coeffs_.size())
      throw ContractViolation("classes live in P^" + std::to_string(ambient_dim()) + " and P^" +
                              std::to_string(other.ambient_dim()));
  }

private:
  static std::size_t checked_length(int ambient_dim) {
    if (ambient_dim < 0) throw ContractViolation("negative ambient dimension");
    return static_cast<std::size_t>(ambient_dim) + 1;
  }

  std::vector<Integer> coeffs_;
};

/// Integers indexed by stratum lo..hi.
class StrataVector {
public:
  StrataVector() = default;
  StrataVector(int lo, int hi) : lo_(lo), values_(static_cast<std::size_t>(checked_span(lo, hi))) {}
  StrataVector(int lo, std::vector<Integer> values) : lo_(lo), values_(std::move(values)) {
    if (lo < 0 || values_.empty()) throw ContractViolation("bad stratum range");
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
  const std::vector<Integer>& values() const { return values_; }

  const Integer& operator[](int stratum) const { return values_.at(offset(stratum)); }
  Integer& operator[](int stratum) { return values_.at(offset(stratum)); }

  friend bool operator==(const StrataVector&, const StrataVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const StrataVector& x) {
    os << "strata " << x.lo_ << ": [";
    for (std::size_t i = 0; i < x.values_.size(); ++i) os << (i ? "," : "") << x.values_[i];
    return os << ']';
  }

private:
  static int checked_span(int lo, int hi) {
    if (lo < 0 || hi < lo) throw ContractViolation("bad stratum range");
    return hi - lo + 1;
  }
  std::size_t offset(int stratum) const {
    if (stratum < lo_ || stratum > hi())
      throw ContractViolation("stratum " + std::to_string(stratum) + " outside " +
                              std::to_string(lo_) + ".." + std::to_string(hi()));
    return static_cast<std::size_t>(stratum - lo_);
  }

  int lo_ = 0;
  std::vector<Integer> values_;
};

} // namespace detvar
