#include "eccspec/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace eccspec {

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
  IntMatrix m(n);
  for (auto& x : m.data_) x = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::max_abs_row_sum() const {
  Integer best = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < n_; ++j) sum += abs((*this)(i, j));
    if (sum > best) best = sum;
  }
  return best;
}

IntMatrix IntMatrix::shifted(const Integer& q, const Integer& p) const {
  IntMatrix out(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = q * data_[k];
  for (std::size_t i = 0; i < n_; ++i) out(i, i) -= p;
  return out;
}

IntMatrix IntMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  IntMatrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      if (indices[a] >= n_ || indices[b] >= n_) {
        throw std::out_of_range("principal_submatrix: index out of range");
      }
      out(a, b) = (*this)(indices[a], indices[b]);
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix +: size mismatch");
  IntMatrix out(a.n_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix -: size mismatch");
  IntMatrix out(a.n_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace eccspec
