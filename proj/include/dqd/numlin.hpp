// Copyright 2026 The dqdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Dense complex linear algebra for the small (at most 6x6) operators of the
/// simulator. Everything is templated on the real scalar; the rest of the
/// library uses the `double` aliases below.
namespace dqd {

template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using cplx = std::complex<double>;
using CMatrix = CMatrixT<double>;
using CVector = CVectorT<double>;

inline constexpr double kPi = std::numbers::pi;

/// Tolerances for the two rungs of the accuracy ladder.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kPulseTol = 1e-9;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::domain_error {
  using std::domain_error::domain_error;
};

/// Largest entry modulus, the norm used for every matrix residual.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

template <typename DA, typename DB>
auto matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  using Real = typename DA::RealScalar;
  CMatrixT<Real> out = a * b;
  return out;
}

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  if (h.rows() != h.cols()) return std::numeric_limits<typename Derived::RealScalar>::infinity();
  return max_abs(h - h.adjoint());
}

template <typename Derived>
typename Derived::RealScalar unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<typename Derived::RealScalar>::infinity();
  using Real = typename Derived::RealScalar;
  const CMatrixT<Real> g = u.adjoint() * u;
  return max_abs(g - CMatrixT<Real>::Identity(u.rows(), u.cols()));
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& h, double tol = kAlgebraTol) {
  return hermiticity_defect(h) <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = kAlgebraTol) {
  return unitarity_defect(u) <= tol;
}

template <typename Derived>
bool is_normalized(const Eigen::MatrixBase<Derived>& v, double tol = kAlgebraTol) {
  return std::abs(v.norm() - 1) <= tol;
}

/// exp(-i * angle * h) for Hermitian h, through the eigendecomposition
/// h = V diag(lambda) V^dagger. Hermiticity is checked relative to the
/// generator's scale so that energy-scaled generators are accepted.
template <typename Derived>
CMatrixT<typename Derived::RealScalar> expm_hermitian(const Eigen::MatrixBase<Derived>& h,
                                                      typename Derived::RealScalar angle) {
  using Real = typename Derived::RealScalar;
  if (h.rows() != h.cols()) throw DimensionMismatch("expm_hermitian: matrix is not square");
  const Real scale = std::max<Real>(1, max_abs(h));
  if (hermiticity_defect(h) > Real(kAlgebraTol) * scale) {
    throw NotHermitian("expm_hermitian: generator is not Hermitian");
  }
  const CMatrixT<Real> hh = h;
  if (angle == Real(0)) return CMatrixT<Real>::Identity(h.rows(), h.cols());
  Eigen::SelfAdjointEigenSolver<CMatrixT<Real>> es(hh);
  const auto& lambda = es.eigenvalues();
  CVectorT<Real> phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::polar(Real(1), -angle * lambda(k));
  }
  const CMatrixT<Real>& vecs = es.eigenvectors();
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

namespace detail {

template <typename Real>
using EntryPair = std::pair<std::complex<Real>, std::complex<Real>>;

template <typename Real>
Real phase_residual(const std::vector<EntryPair<Real>>& terms, Real phi) {
  const std::complex<Real> c = std::polar(Real(1), phi);
  Real worst = 0;
  for (const auto& [u, v] : terms) worst = std::max(worst, std::abs(u - c * v));
  return worst;
}

}  // namespace detail

/// min over unit-modulus c of ||u - c v||_max.
///
/// Each |u_k - e^{i phi} v_k|^2 = |u_k|^2 + |v_k|^2 - 2 Re(conj(u_k) v_k e^{i phi})
/// is a sinusoid in phi, so the minimax sits either at the minimizer of one
/// term or where two terms cross. All such phases are evaluated directly.
template <typename DA, typename DB>
typename DA::RealScalar dist_up_to_global_phase(const Eigen::MatrixBase<DA>& a,
                                                const Eigen::MatrixBase<DB>& b) {
  using Real = typename DA::RealScalar;
  using Cx = std::complex<Real>;
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("dist_up_to_global_phase: shape mismatch");
  }
  const CMatrixT<Real> u = a;
  const CMatrixT<Real> v = b;
  if (u.size() == 0) return 0;

  std::vector<detail::EntryPair<Real>> terms;
  terms.reserve(u.size());
  for (Eigen::Index k = 0; k < u.size(); ++k) terms.emplace_back(u.data()[k], v.data()[k]);
  auto key = [](const detail::EntryPair<Real>& t) {
    return std::array<Real, 4>{t.first.real(), t.first.imag(), t.second.real(), t.second.imag()};
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

  std::vector<Real> candidates{0};
  std::vector<Real> level(terms.size());
  std::vector<Cx> coupling(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [uk, vk] = terms[k];
    level[k] = std::norm(uk) + std::norm(vk);
    coupling[k] = std::conj(uk) * vk;
    if (std::abs(coupling[k]) > 0) candidates.push_back(-std::arg(coupling[k]));
  }
  for (std::size_t k = 0; k < terms.size(); ++k) {
    for (std::size_t l = k + 1; l < terms.size(); ++l) {
      const Cx d = coupling[k] - coupling[l];
      if (std::abs(d) == 0) continue;
      const Real c = (level[k] - level[l]) / (2 * std::abs(d));
      if (std::abs(c) > 1) continue;
      const Real delta = std::arg(d), w = std::acos(c);
      candidates.push_back(-delta + w);
      candidates.push_back(-delta - w);
    }
  }
  Real best = std::numeric_limits<Real>::infinity();
  for (Real phi : candidates) best = std::min(best, detail::phase_residual(terms, phi));
  return best;
}

/// |<a|b>|^2 for normalized vectors.
template <typename DA, typename DB>
typename DA::RealScalar state_fidelity(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("state_fidelity: size mismatch");
  return std::norm(a.dot(b));
}

/// Kronecker product, first factor most significant.
template <typename DA, typename DB>
CMatrixT<typename DA::RealScalar> kron(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  using Real = typename DA::RealScalar;
  CMatrixT<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Principal submatrix on the given (0-based) indices.
template <typename Derived>
CMatrixT<typename Derived::RealScalar> restrict_to(const Eigen::MatrixBase<Derived>& m,
                                                   std::span<const int> idx) {
  using Real = typename Derived::RealScalar;
  const auto n = static_cast<Eigen::Index>(idx.size());
  CMatrixT<Real> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(idx[i], idx[j]);
  }
  return out;
}

/// Pauli matrices in the double aliases.
inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace dqd
