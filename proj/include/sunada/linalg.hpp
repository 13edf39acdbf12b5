#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sunada/error.hpp"
#include "sunada/rational.hpp"

namespace sunada {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse in F_p, p prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Reduces a rational with denominator prime to p.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

struct PrimeField {
  using T = std::uint64_t;
  std::uint64_t p;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(T a, T b) const { return (a + b) % p; }
  T sub(T a, T b) const { return (a + p - b) % p; }
  T mul(T a, T b) const { return p <= 0xffffffffu ? a * b % p : mul_mod(a, b, p); }
  T inv(T a) const { return inv_mod(a, p); }
  bool is_zero(T a) const { return a == 0; }
};

struct RationalField {
  using T = Rational;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  bool is_zero(const T& a) const { return a == 0; }
};

/// Dense row-major matrix over a field F.
template <class F>
struct Matrix {
  using T = typename F::T;
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, T fill = T()) : rows(r), cols(c), a(r * c, fill) {}
  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const Matrix&) const = default;
};

template <class F>
Matrix<F> identity_matrix(const F& f, std::size_t n) {
  Matrix<F> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Matrix<F> multiply(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols != y.rows) throw Error(ErrorKind::DegreeMismatch, "matrix shapes do not compose");
  Matrix<F> out(x.rows, y.cols, f.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (f.is_zero(x(i, k))) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) = f.add(out(i, j), f.mul(x(i, k), y(k, j)));
    }
  return out;
}

template <class F>
std::vector<typename F::T> apply(const F& f, const Matrix<F>& m, const std::vector<typename F::T>& v) {
  std::vector<typename F::T> out(m.rows, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!f.is_zero(v[j])) out[i] = f.add(out[i], f.mul(m(i, j), v[j]));
  return out;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(const F& f, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    const auto scale = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Matrix<F> m) {
  return row_reduce(f, m).size();
}

/// Basis of { x : m x = 0 }.
template <class F>
std::vector<std::vector<typename F::T>> nullspace(const F& f, Matrix<F> m) {
  auto pivots = row_reduce(f, m);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<typename F::T>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::T> x(m.cols, f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.sub(f.zero(), m(r, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const F& f, const Matrix<F>& m) {
  if (m.rows != m.cols) return std::nullopt;
  const std::size_t n = m.rows;
  Matrix<F> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto pivots = row_reduce(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Solves x m = b for a row vector x when one exists (m: r x c, b: length c).
template <class F>
std::optional<std::vector<typename F::T>> solve_left(const F& f, const Matrix<F>& m, const std::vector<typename F::T>& b) {
  // Transpose to m^T x^T = b^T and reduce the augmented system.
  Matrix<F> aug(m.cols, m.rows + 1, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) aug(j, i) = m(i, j);
  for (std::size_t j = 0; j < m.cols; ++j) aug(j, m.rows) = b[j];
  auto pivots = row_reduce(f, aug);
  if (!pivots.empty() && pivots.back() == m.rows) return std::nullopt;
  std::vector<typename F::T> x(m.rows, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.rows);
  return x;
}

}  // namespace sunada
