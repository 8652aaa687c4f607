#pragma once

#include "detvar/detail/root_polynomial.hpp"
#include "detvar/determinantal.hpp"
#include "detvar/errors.hpp"
#include "detvar/int_matrix.hpp"
#include "detvar/integer.hpp"
#include "detvar/partition.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace detvar {

// ---------------------------------------------------------------------------
// Box guardrail

inline std::atomic<int>& box_limit_storage() {
  static std::atomic<int> limit{36};
  return limit;
}

/// Largest k(n-k) accepted by tangent_chern / a_matrix (default 36).
inline int max_box_dimension() { return box_limit_storage().load(); }
inline void set_max_box_dimension(int limit) { box_limit_storage().store(limit); }

class ScopedBoxLimit {
public:
  explicit ScopedBoxLimit(int limit) : previous_(max_box_dimension()) {
    set_max_box_dimension(limit);
  }
  ~ScopedBoxLimit() { set_max_box_dimension(previous_); }
  ScopedBoxLimit(const ScopedBoxLimit&) = delete;
  ScopedBoxLimit& operator=(const ScopedBoxLimit&) = delete;

private:
  int previous_;
};

inline void check_box_size(const Box& box) {
  if (box.dimension() > max_box_dimension())
    throw SizeError("Grassmannian box " + std::to_string(box.rows) + "x" +
                    std::to_string(box.cols) + " has dimension " +
                    std::to_string(box.dimension()) + " > limit " +
                    std::to_string(max_box_dimension()) + " (raise with --max-box)");
}

// ---------------------------------------------------------------------------
// Chow classes

/// Integer combination of Schubert classes sigma_lambda of G(k, n), lambda in the box.
class ChowClass {
public:
  using Terms = std::map<Partition, Integer>;

  explicit ChowClass(Box box) : box_(box) {}

  static ChowClass one(Box box) { return schubert(box, Partition{}); }

  static ChowClass schubert(Box box, const Partition& lambda, const Integer& c = 1) {
    ChowClass x(box);
    x.add_term(lambda, c);
    return x;
  }

  const Box& box() const { return box_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Partition& lambda, const Integer& c) {
    if (!lambda.fits(box_))
      throw ContractViolation("sigma" + lambda.to_string() + " does not fit the " +
                              std::to_string(box_.rows) + "x" + std::to_string(box_.cols) + " box");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Degree-d part (partitions of weight d).
  ChowClass homogeneous(int d) const {
    ChowClass out(box_);
    for (const auto& [lambda, c] : terms_)
      if (lambda.weight() == d) out.terms_.emplace(lambda, c);
    return out;
  }

  ChowClass& operator+=(const ChowClass& other) {
    require_same_box(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
  }
  ChowClass& operator-=(const ChowClass& other) {
    require_same_box(other);
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
    return *this;
  }
  ChowClass& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [lambda, c] : terms_) c *= s;
    return *this;
  }

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator-(ChowClass a) { return a *= -1; }
  friend ChowClass operator*(const Integer& s, ChowClass a) { return a *= s; }

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lambda, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += to_decimal(c) + "*s" + lambda.to_string();
    }
    return s;
  }

  void require_same_box(const ChowClass& other) const {
    if (!(box_ == other.box_))
      throw ContractViolation("Chow classes live on different Grassmannians");
  }

private:
  Box box_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients

namespace detail {

// s_lambda * s_mu = sum over semistandard T of shape mu whose reverse row reading
// word w keeps lambda + content(w_1..w_j) a partition for every prefix.
inline std::vector<std::pair<Partition, Integer>> lr_expand_uncached(const Partition& lambda,
                                                                     const Partition& mu) {
  std::vector<std::pair<int, int>> cells; // reading order: rows top-down, right to left
  for (int r = 0; r < mu.length(); ++r)
    for (int c = mu[static_cast<std::size_t>(r)] - 1; c >= 0; --c) cells.emplace_back(r, c);

  std::vector<std::vector<int>> tableau;
  for (int r = 0; r < mu.length(); ++r)
    tableau.emplace_back(static_cast<std::size_t>(mu[static_cast<std::size_t>(r)]), 0);

  std::vector<int> shape(lambda.parts());
  shape.resize(static_cast<std::size_t>(lambda.length() + mu.length()), 0);

  std::map<Partition, Integer> result;
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      result[Partition(shape)] += 1;
      return;
    }
    auto [r, c] = cells[idx];
    auto ur = static_cast<std::size_t>(r);
    auto uc = static_cast<std::size_t>(c);
    int lo = r > 0 ? tableau[ur - 1][uc] + 1 : 1;
    int hi = (c + 1 < mu[ur]) ? tableau[ur][uc + 1] : static_cast<int>(shape.size());
    for (int v = lo; v <= hi; ++v) {
      auto row = static_cast<std::size_t>(v - 1);
      if (row > 0 && shape[row] + 1 > shape[row - 1]) continue;
      ++shape[row];
      tableau[ur][uc] = v;
      self(self, idx + 1);
      --shape[row];
    }
  };
  fill(fill, 0);
  return {result.begin(), result.end()};
}

struct LrCache {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, std::vector<std::pair<Partition, Integer>>> entries;
};

inline LrCache& lr_cache() {
  static LrCache cache;
  return cache;
}

} // namespace detail

/// Full (box independent) expansion of sigma_lambda * sigma_mu; memoized process-wide.
inline const std::vector<std::pair<Partition, Integer>>& lr_expand(const Partition& lambda,
                                                                   const Partition& mu) {
  auto& cache = detail::lr_cache();
  auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  auto value = detail::lr_expand_uncached(lambda, mu);
  std::unique_lock lock(cache.mutex);
  return cache.entries.try_emplace(std::move(key), std::move(value)).first->second;
}

inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  for (const auto& [p, c] : lr_expand(lambda, mu))
    if (p == nu) return c;
  return 0;
}

/// Copy of the memoized LR table, for persistence.
inline std::map<std::pair<Partition, Partition>, std::vector<std::pair<Partition, Integer>>>
lr_cache_snapshot() {
  auto& cache = detail::lr_cache();
  std::shared_lock lock(cache.mutex);
  return cache.entries;
}

/// Seeds the LR table; existing entries win.
inline void lr_cache_seed(const Partition& lambda, const Partition& mu,
                          std::vector<std::pair<Partition, Integer>> terms) {
  auto& cache = detail::lr_cache();
  std::unique_lock lock(cache.mutex);
  cache.entries.try_emplace(std::make_pair(lambda, mu), std::move(terms));
}

/// Drops every entry. References returned by lr_expand die with it, so do not
/// call this while other threads multiply.
inline void lr_cache_clear() {
  auto& cache = detail::lr_cache();
  std::unique_lock lock(cache.mutex);
  cache.entries.clear();
}

// ---------------------------------------------------------------------------
// Ring operations

inline ChowClass multiply(const ChowClass& a, const ChowClass& b) {
  a.require_same_box(b);
  const Box& box = a.box();
  ChowClass out(box);
  for (const auto& [lambda, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) {
      if (lambda.weight() + mu.weight() > box.dimension()) continue;
      Integer cab = ca * cb;
      for (const auto& [nu, c] : lr_expand(lambda, mu))
        if (nu.fits(box)) out.add_term(nu, cab * c);
    }
  return out;
}

inline ChowClass operator*(const ChowClass& a, const ChowClass& b) { return multiply(a, b); }

/// Degree map: coefficient of the point class sigma_(full box).
inline Integer integrate(const ChowClass& x) {
  return x.coefficient(Partition::rectangle(x.box().rows, x.box().cols));
}

/// integrate(a * b), evaluated through Poincare duality.
inline Integer intersection_number(const ChowClass& a, const ChowClass& b) {
  a.require_same_box(b);
  Integer total = 0;
  for (const auto& [lambda, ca] : a.terms()) {
    Integer cb = b.coefficient(lambda.complement(a.box()));
    if (cb != 0) total += ca * cb;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Chern classes of the universal bundles

/// [c_0(Q), ..., c_{n-k}(Q)] with c_i(Q) = sigma_(i).
inline std::vector<ChowClass> chern_Q(const Box& box) {
  std::vector<ChowClass> out;
  for (int i = 0; i <= box.cols; ++i) out.push_back(ChowClass::schubert(box, Partition::row(i)));
  return out;
}

/// [c_0(S^dual), ..., c_k(S^dual)] with c_i(S^dual) = sigma_(1^i).
inline std::vector<ChowClass> chern_S_dual(const Box& box) {
  std::vector<ChowClass> out;
  for (int i = 0; i <= box.rows; ++i)
    out.push_back(ChowClass::schubert(box, Partition::column(i)));
  return out;
}

/// Graded pieces 0..dim G of c(E^{+m}) (or c((E^dual)^{+m}) when dualize),
/// given the Chern classes c_0 = 1, c_1, ... of E.
inline std::vector<ChowClass> bundle_power_chern(std::span<const ChowClass> chern, int m,
                                                 bool dualize) {
  if (chern.empty() || m < 1)
    throw ContractViolation("bundle_power_chern needs a nonempty Chern sequence and m >= 1");
  const Box box = chern.front().box();
  if (!(chern.front() == ChowClass::one(box)))
    throw ContractViolation("total Chern class must start with 1");

  ChowClass total(box);
  for (std::size_t i = 0; i < chern.size(); ++i) {
    chern[i].require_same_box(total);
    total += (dualize && i % 2 == 1) ? -chern[i] : chern[i];
  }
  ChowClass power = ChowClass::one(box);
  for (int j = 0; j < m; ++j) power = multiply(power, total);

  std::vector<ChowClass> out;
  for (int d = 0; d <= box.dimension(); ++d) out.push_back(power.homogeneous(d));
  return out;
}

namespace detail {

// prod_i sum_s (1 + x_i)^{r-s} e_s(y), with e_s(y) = c_s(Q) = h_s(x), in the roots of S^dual.
inline std::map<Partition, Integer> tangent_chern_terms(const Box& box) {
  const int k = box.rows, r = box.cols, top = box.dimension();
  std::vector<RootPolynomial> h;
  for (int s = 0; s <= r; ++s) h.push_back(RootPolynomial::complete_homogeneous(k, top, s));

  RootPolynomial product = RootPolynomial::constant(k, top, 1);
  for (int i = 0; i < k; ++i) {
    RootPolynomial factor(k, top);
    for (int s = 0; s <= r; ++s)
      factor += RootPolynomial::one_plus_root_power(k, top, i, r - s) * h[static_cast<std::size_t>(s)];
    product = product * factor;
  }
  return schur_coefficients(product, box);
}

struct TangentCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::map<Partition, Integer>> entries;
};

inline TangentCache& tangent_cache() {
  static TangentCache cache;
  return cache;
}

} // namespace detail

/// Total Chern class c(S^dual (x) Q) of the tangent bundle of G(k, n).
inline ChowClass tangent_chern(const Box& box) {
  check_box_size(box);
  auto& cache = detail::tangent_cache();
  std::map<Partition, Integer> terms;
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.entries.find({box.rows, box.cols});
    if (it != cache.entries.end()) terms = it->second;
  }
  if (terms.empty()) {
    // The tangent bundle of G(n-k, n) is the same tensor product with roles swapped;
    // sigma_lambda corresponds to sigma_{lambda'}, so work with the fewer roots.
    if (box.rows > box.cols) {
      for (auto& [lambda, c] : detail::tangent_chern_terms(box.transposed()))
        terms.emplace(lambda.conjugate(), c);
    } else {
      terms = detail::tangent_chern_terms(box);
    }
    std::lock_guard lock(cache.mutex);
    cache.entries.try_emplace({box.rows, box.cols}, terms);
  }
  ChowClass out(box);
  for (const auto& [lambda, c] : terms) out.add_term(lambda, c);
  return out;
}

// ---------------------------------------------------------------------------
// The A matrix

/// Matrix [alpha^l_{i,p}] with alpha^l_{i,p} = int c(T_G) c_i(Q^{dual m}) c_{mk-l+p-i}(S^{dual m}),
/// of size (m(n-k)+1)^2. alpha^{mk} is the A matrix.
inline IntMatrix alpha_matrix(int m, int n, int k, int l) {
  require_parameters(m, n, k, 1);
  const Box box(k, n - k);
  check_box_size(box);
  const int size = m * (n - k) + 1;
  const int top = box.dimension();

  const ChowClass tangent = tangent_chern(box);
  const auto q_dual = bundle_power_chern(chern_Q(box), m, true);
  const auto s_dual = bundle_power_chern(chern_S_dual(box), m, false);

  IntMatrix out(size, size);
  for (int i = 0; i < size && i <= top; ++i) {
    const ChowClass& ci = q_dual[static_cast<std::size_t>(i)];
    if (ci.is_zero()) continue;
    const ChowClass row = multiply(tangent, ci);
    for (int p = 0; p < size; ++p) {
      int j = m * k - l + p - i;
      if (j < 0 || j > top) continue;
      out(i, p) = intersection_number(row, s_dual[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

/// A_{i,p}(m,n,k) = int c(S^dual (x) Q) c_i(Q^{dual m}) c_{p-i}(S^{dual m}).
inline IntMatrix a_matrix(int m, int n, int k) {
  require_parameters(m, n, k, 1);
  return alpha_matrix(m, n, k, m * k);
}

} // namespace detvar
