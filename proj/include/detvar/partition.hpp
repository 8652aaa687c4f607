#pragma once

#include "detvar/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace detvar {

/// The k x (n-k) rectangle indexing Schubert classes of G(k, n).
struct Box {
  int rows = 1;
  int cols = 1;

  Box() = default;
  Box(int r, int c) : rows(r), cols(c) {
    if (r < 1 || c < 1)
      throw DomainError("box sides must be positive, got " + std::to_string(r) +
                        "x" + std::to_string(c));
  }

  /// dim G(k, n) = k (n - k)
  int dimension() const { return rows * cols; }
  Box transposed() const { return Box(cols, rows); }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Weakly decreasing sequence of positive parts (zeros are stripped).
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw ContractViolation("partition parts must be nonnegative");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ContractViolation("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  static Partition row(int length) {
    return length <= 0 ? Partition{} : Partition(std::vector<int>{length});
  }
  static Partition column(int height) {
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(height, 0)), 1));
  }
  static Partition rectangle(int rows, int cols) {
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  /// i-th part, 0 beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool fits(const Box& box) const {
    return length() <= box.rows && (empty() || parts_.front() <= box.cols);
  }

  Partition conjugate() const {
    std::vector<int> out(empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
  }

  /// The partition whose Schubert class is Poincare dual to this one in the box.
  Partition complement(const Box& box) const {
    if (!fits(box)) throw ContractViolation("partition " + to_string() + " does not fit the box");
    std::vector<int> out(static_cast<std::size_t>(box.rows));
    for (int i = 0; i < box.rows; ++i)
      out[static_cast<std::size_t>(i)] = box.cols - (*this)[static_cast<std::size_t>(box.rows - 1 - i)];
    return Partition(std::move(out));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// All partitions fitting in the box, ordered by weight then lexicographically.
inline std::vector<Partition> partitions_in_box(const Box& box) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int row, int max_part) {
    if (row == box.rows) {
      out.emplace_back(current);
      return;
    }
    for (int p = 0; p <= max_part; ++p) {
      current.push_back(p);
      extend(row + 1, p);
      current.pop_back();
    }
  };
  extend(0, box.cols);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a < b;
  });
  return out;
}

} // namespace detvar
