#pragma once

#include <array>
#include <initializer_list>
#include <cstddef>
#include <string>
#include <vector>

#include "apapr/error.hpp"

namespace apapr {

namespace detail {
template <class T>
bool entry_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

/// Dense cube-shaped array: every index runs over [0, dim). Rank 1 holds
/// vectors and covectors, rank 2 square matrices, rank 3 and 4 frame
/// components of tensors. Storage is row-major (last index fastest).
template <class T, std::size_t Rank>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::size_t dim, const T& fill = T(0)) : dim_(dim), data_(size_for(dim), fill) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  template <class... I>
  T& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank, "index count must match rank");
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank, "index count must match rank");
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  T& at(const std::array<std::size_t, Rank>& idx) { return data_[offset(idx)]; }
  const T& at(const std::array<std::size_t, Rank>& idx) const { return data_[offset(idx)]; }

  T& flat(std::size_t i) { return data_[i]; }
  const T& flat(std::size_t i) const { return data_[i]; }

  /// Multi-index of a flat position.
  std::array<std::size_t, Rank> unflatten(std::size_t i) const {
    std::array<std::size_t, Rank> idx{};
    for (std::size_t r = Rank; r-- > 0;) {
      idx[r] = i % dim_;
      i /= dim_;
    }
    return idx;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!detail::entry_is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

  Tensor& operator+=(const Tensor& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor& operator*=(const T& s) {
    for (T& v : data_) v *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const T& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    Tensor out = *this;
    for (T& v : out.data_) v = -v;
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    Tensor<U, Rank> out(dim_, U(0));
    for (std::size_t i = 0; i < data_.size(); ++i) out.flat(i) = f(data_[i]);
    return out;
  }

 private:
  static std::size_t size_for(std::size_t dim) {
    std::size_t n = 1;
    for (std::size_t r = 0; r < Rank; ++r) n *= dim;
    return n;
  }

  std::size_t offset(const std::array<std::size_t, Rank>& idx) const {
    std::size_t o = 0;
    for (std::size_t r = 0; r < Rank; ++r) o = o * dim_ + idx[r];
    return o;
  }

  void check_same(const Tensor& o) const {
    if (o.dim_ != dim_)
      throw DimensionError("tensor dimension mismatch: " + std::to_string(dim_) + " vs " +
                           std::to_string(o.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<T> data_;
};

template <class T>
using Vector = Tensor<T, 1>;
template <class T>
using Matrix = Tensor<T, 2>;
template <class T>
using Tensor3 = Tensor<T, 3>;
template <class T>
using Tensor4 = Tensor<T, 4>;

template <class T>
Vector<T> basis_vector(std::size_t dim, std::size_t i) {
  Vector<T> v(dim, T(0));
  v(i) = T(1);
  return v;
}

template <class T>
Matrix<T> identity_matrix(std::size_t dim) {
  Matrix<T> m(dim, T(0));
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.dim(), T(0));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(j, i) = m(i, j);
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix product dimension mismatch");
  const std::size_t n = a.dim();
  Matrix<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
Vector<T> operator*(const Matrix<T>& a, const Vector<T>& x) {
  if (a.dim() != x.dim()) throw DimensionError("matrix-vector dimension mismatch");
  Vector<T> out(x.dim(), T(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i) += a(i, j) * x(j);
  return out;
}

/// x^T m y
template <class T>
T bilinear(const Matrix<T>& m, const Vector<T>& x, const Vector<T>& y) {
  if (m.dim() != x.dim() || m.dim() != y.dim()) throw DimensionError("bilinear form dimension mismatch");
  T s(0);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (std::size_t j = 0; j < m.dim(); ++j) s += x(i) * m(i, j) * y(j);
  }
  return s;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot product dimension mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i) * b(i);
  return s;
}

template <class T>
T trace(const Matrix<T>& m) {
  T s(0);
  for (std::size_t i = 0; i < m.dim(); ++i) s += m(i, i);
  return s;
}

/// a ⊗ b as a matrix: (a ⊗ b)(i, j) = a(i) b(j).
template <class T>
Matrix<T> outer(const Vector<T>& a, const Vector<T>& b) {
  Matrix<T> out(a.dim(), T(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i) * b(j);
  return out;
}

inline std::string index_string(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace apapr
