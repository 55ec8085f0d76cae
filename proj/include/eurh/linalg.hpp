#pragma once

// Dense complex matrices for the handful of small spaces used here
// (a qubit, two qubits, two qubits plus one interior mode).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eurh {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDimension = 8;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

/// Kronecker product; entry (i1*rb + i2, j1*cb + j2) = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix over the subsystems listed in `keep` (ascending, unique).
/// The product of `dims` must equal the matrix dimension.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Sweeps visit the (p, q) pairs in row-major order, so the result is a pure
/// function of the input. Each rotation first removes the phase of the pivot
/// and then applies the real symmetric Jacobi rotation. Eigenvectors inside a
/// degenerate cluster are not unique.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// n_x X + n_y Y + n_z Z
ComplexMatrix along(double nx, double ny, double nz);
}  // namespace pauli

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2, 4 or 8.
///
/// Construction checks the invariants and throws ContractViolation when one
/// fails. `unnormalized` skips only the trace check, for the intermediate of a
/// post-selected operation.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = 1e-10;

  explicit DensityMatrix(ComplexMatrix m);
  static DensityMatrix unnormalized(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  bool normalized() const { return normalized_; }
  double trace() const { return m_.trace().real(); }

  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  DensityMatrix(ComplexMatrix m, bool normalized);

  ComplexMatrix m_;
  bool normalized_ = true;
};

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

}  // namespace eurh
