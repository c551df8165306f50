#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eccspec/integer.hpp"

namespace eccspec {

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t n);

  std::size_t size() const { return n_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  std::span<const Integer> entries() const { return data_; }

  bool is_symmetric() const;
  Integer trace() const;
  Integer max_abs_row_sum() const;

  // q * this - p * I.
  IntMatrix shifted(const Integer& q, const Integer& p) const;
  IntMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

}  // namespace eccspec
