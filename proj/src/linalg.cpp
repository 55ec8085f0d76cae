#include "eurh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "eurh/errors.hpp"

namespace eurh {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw StructuralError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw StructuralError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw StructuralError("expected " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols, std::vector<Complex>(entries)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!square()) throw StructuralError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw StructuralError("shape mismatch in addition");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw StructuralError("shape mismatch in subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw StructuralError("shape mismatch in product");
  ComplexMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("shape mismatch in comparison");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.square()) throw StructuralError("Hermiticity of a non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex s = a(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
    }
  return out;
}

namespace {

// Mixed-radix digits of `index`, most significant subsystem first.
void split_index(std::size_t index, std::span<const std::size_t> dims, std::span<std::size_t> digits) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (!m.square()) throw StructuralError("partial trace of a non-square matrix");
  if (dims.empty() || keep.empty()) throw StructuralError("partial trace needs subsystems to keep");
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != m.rows()) {
    throw StructuralError("subsystem dimensions multiply to " + std::to_string(total) + " but matrix is " +
                          std::to_string(m.rows()) + "-dimensional");
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= dims.size()) throw StructuralError("kept subsystem index out of range");
    if (k > 0 && keep[k] <= keep[k - 1]) throw StructuralError("kept subsystems must be ascending and unique");
  }

  std::vector<bool> kept(dims.size(), false);
  std::size_t out_dim = 1;
  for (auto k : keep) {
    kept[k] = true;
    out_dim *= dims[k];
  }

  std::vector<std::size_t> di(dims.size()), dj(dims.size());
  auto reduced_index = [&](std::span<const std::size_t> digits) {
    std::size_t r = 0;
    for (auto k : keep) r = r * dims[k] + digits[k];
    return r;
  };

  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t i = 0; i < total; ++i) {
    split_index(i, dims, di);
    for (std::size_t j = 0; j < total; ++j) {
      split_index(j, dims, dj);
      bool traced_match = true;
      for (std::size_t k = 0; k < dims.size() && traced_match; ++k)
        if (!kept[k] && di[k] != dj[k]) traced_match = false;
      if (traced_match) out(reduced_index(di), reduced_index(dj)) += m(i, j);
    }
  }
  return out;
}

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
  if (!m.square()) throw StructuralError("eigendecomposition of a non-square matrix");
  if (!m.all_finite()) throw StructuralError("eigendecomposition of a matrix with non-finite entries");
  if (hermiticity_defect(m) > 1e-10) throw StructuralError("eigendecomposition of a non-Hermitian matrix");

  const std::size_t n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (const auto& z : a.entries()) scale += std::norm(z);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= 1e-32 * scale || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex phase_conj = std::conj(apq) / mag;  // e^{-i arg a_pq}

        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on the (p, q) plane.
        const Complex jqp = -s * phase_conj;
        const Complex jqq = c * phase_conj;

        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * s + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^dagger A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = s * apk + std::conj(jqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = vkp * s + vkq * jqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eigen(m).values; }

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

ComplexMatrix along(double nx, double ny, double nz) {
  return ComplexMatrix(2, 2, {Complex(nz), Complex(nx, -ny), Complex(nx, ny), Complex(-nz)});
}

}  // namespace pauli

DensityMatrix::DensityMatrix(ComplexMatrix m) : DensityMatrix(std::move(m), true) {}

DensityMatrix DensityMatrix::unnormalized(ComplexMatrix m) { return DensityMatrix(std::move(m), false); }

DensityMatrix::DensityMatrix(ComplexMatrix m, bool normalized) : m_(std::move(m)), normalized_(normalized) {
  if (!m_.square()) throw StructuralError("density matrix must be square");
  const std::size_t d = m_.rows();
  if (d != 2 && d != 4 && d != 8) throw StructuralError("density matrix dimension must be 2, 4 or 8");
  if (!m_.all_finite()) throw ContractViolation("density matrix has non-finite entries");
  const double herm = hermiticity_defect(m_);
  if (herm > kHermitianTol) throw ContractViolation("density matrix not Hermitian (defect " + std::to_string(herm) + ")");
  if (normalized_) {
    const double t = m_.trace().real();
    if (std::abs(t - 1.0) > kTraceTol) throw ContractViolation("density matrix trace " + std::to_string(t) + " != 1");
  }
  const double smallest = hermitian_eigenvalues(m_).back();
  if (smallest < -kPositivityTol) {
    throw ContractViolation("density matrix not positive semidefinite (eigenvalue " + std::to_string(smallest) + ")");
  }
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), dims, keep);
  if (rho.normalized()) return DensityMatrix(std::move(reduced));
  return DensityMatrix::unnormalized(std::move(reduced));
}

}  // namespace eurh
