#pragma once

#include "detvar/errors.hpp"
#include "detvar/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace detvar {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_of(rows, cols)) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(size_of(rows_, cols_));
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw ContractViolation("ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix id(n, n);
    for (int i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(int i, int j) { return data_[index(i, j)]; }
  const Integer& operator()(int i, int j) const { return data_[index(i, j)]; }

  const std::vector<Integer>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ContractViolation("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int p = 0; p < a.cols_; ++p) {
        const Integer& aip = a(i, p);
        if (aip == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aip * b(p, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  static std::size_t size_of(int r, int c) {
    if (r < 0 || c < 0) throw ContractViolation("negative matrix dimension");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(c);
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
      throw ContractViolation("matrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

} // namespace detvar
