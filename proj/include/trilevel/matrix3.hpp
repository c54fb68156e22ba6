#pragma once

// Fixed-size 3x3 linear algebra used throughout the library.
//
// Basis ordering: component 0 is level |3>, component 1 is level |2>,
// component 2 is level |1>. Every matrix and amplitude triple in the
// library uses this ordering.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace trilevel {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 3>;
using RealMatrix3 = std::array<std::array<double, 3>, 3>;

inline constexpr Complex kI{0.0, 1.0};

/// Atomic level label |1>, |2>, |3>.
enum class Level { One = 1, Two = 2, Three = 3 };

/// Component index of a level in the (|3>, |2>, |1>) basis.
constexpr std::size_t basis_index(Level level) {
  return static_cast<std::size_t>(3 - static_cast<int>(level));
}

constexpr int level_number(Level level) { return static_cast<int>(level); }

/// Unit amplitude triple for an atom prepared in `level`.
inline Amplitudes basis_amplitudes(Level level) {
  Amplitudes a{};
  a[basis_index(level)] = 1.0;
  return a;
}

inline double norm_squared(const Amplitudes& a) {
  return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

class ComplexMatrix3 {
 public:
  constexpr ComplexMatrix3() = default;

  static ComplexMatrix3 identity() { return diagonal(1.0, 1.0, 1.0); }

  static ComplexMatrix3 diagonal(Complex a, Complex b, Complex c) {
    ComplexMatrix3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  }

  static ComplexMatrix3 from_real(const RealMatrix3& r) {
    ComplexMatrix3 m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = r[i][j];
    return m;
  }

  // 0-based (row, col).
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row][col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row][col]; }

  ComplexMatrix3& operator+=(const ComplexMatrix3& o) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) data_[i][j] += o.data_[i][j];
    return *this;
  }
  ComplexMatrix3& operator-=(const ComplexMatrix3& o) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) data_[i][j] -= o.data_[i][j];
    return *this;
  }
  ComplexMatrix3& operator*=(Complex s) {
    for (auto& row : data_)
      for (auto& x : row) x *= s;
    return *this;
  }

  friend ComplexMatrix3 operator+(ComplexMatrix3 a, const ComplexMatrix3& b) { return a += b; }
  friend ComplexMatrix3 operator-(ComplexMatrix3 a, const ComplexMatrix3& b) { return a -= b; }
  friend ComplexMatrix3 operator*(ComplexMatrix3 a, Complex s) { return a *= s; }
  friend ComplexMatrix3 operator*(Complex s, ComplexMatrix3 a) { return a *= s; }
  friend ComplexMatrix3 operator*(ComplexMatrix3 a, double s) { return a *= Complex(s); }
  friend ComplexMatrix3 operator*(double s, ComplexMatrix3 a) { return a *= Complex(s); }

  friend ComplexMatrix3 operator*(const ComplexMatrix3& a, const ComplexMatrix3& b) {
    ComplexMatrix3 c;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j) c.data_[i][j] += a.data_[i][k] * b.data_[k][j];
    return c;
  }

  friend Amplitudes operator*(const ComplexMatrix3& a, const Amplitudes& v) {
    Amplitudes out{};
    for (std::size_t i = 0; i < 3; ++i)
      out[i] = a.data_[i][0] * v[0] + a.data_[i][1] * v[1] + a.data_[i][2] * v[2];
    return out;
  }

  ComplexMatrix3 adjoint() const {
    ComplexMatrix3 m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.data_[i][j] = std::conj(data_[j][i]);
    return m;
  }

  Complex trace() const { return data_[0][0] + data_[1][1] + data_[2][2]; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& row : data_)
      for (const auto& x : row) m = std::max(m, std::abs(x));
    return m;
  }

  bool is_hermitian(double tol = 0.0) const {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (std::abs(data_[i][j] - std::conj(data_[j][i])) > tol) return false;
    return true;
  }

  friend bool operator==(const ComplexMatrix3&, const ComplexMatrix3&) = default;

 private:
  std::array<std::array<Complex, 3>, 3> data_{};
};

inline ComplexMatrix3 commutator(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  return a * b - b * a;
}

inline ComplexMatrix3 anticommutator(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  return a * b + b * a;
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  return (a - b).max_abs();
}

inline RealMatrix3 transpose(const RealMatrix3& m) {
  RealMatrix3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

inline RealMatrix3 multiply(const RealMatrix3& a, const RealMatrix3& b) {
  RealMatrix3 c{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline double max_abs_diff(const RealMatrix3& a, const RealMatrix3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

inline RealMatrix3 real_identity() { return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}; }

}  // namespace trilevel
