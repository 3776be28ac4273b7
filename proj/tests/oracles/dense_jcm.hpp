#pragma once

// Dense-matrix model of the atom + N-mode system on a truncated Fock space.
// Builds the interaction operator from raw ladder-operator matrix elements
// and exponentiates it by eigendecomposition. Shares no code with the library.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Basis |atom, n_1, ..., n_N>, atom 0 = excited, 1 = ground; atom index is the
// most significant digit, then the modes in order.
class DenseModel {
 public:
  DenseModel(std::vector<int> k, std::vector<int> dims) : k_(std::move(k)), dims_(std::move(dims)) {
    field_dim_ = 1;
    for (const int d : dims_) {
      field_dim_ *= d;
    }
  }

  int dim() const { return 2 * field_dim_; }

  int index(int atom, const std::vector<int>& n) const {
    int flat = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      flat = flat * dims_[j] + n[j];
    }
    return atom * field_dim_ + flat;
  }

  std::vector<int> field_digits(int flat) const {
    std::vector<int> n(dims_.size());
    for (std::size_t j = dims_.size(); j-- > 0;) {
      n[j] = flat % dims_[j];
      flat /= dims_[j];
    }
    return n;
  }

  // C2 / lambda = delta sigma_z + sigma_+ prod a^k + sigma_- prod a^dag^k
  Eigen::MatrixXd c2(double delta) const {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim(), dim());
    for (int f = 0; f < field_dim_; ++f) {
      h(f, f) = delta;
      h(field_dim_ + f, field_dim_ + f) = -delta;
      // sigma_- a^dag^k |+, n> = sqrt(prod (n+k)!/n!) |-, n + k>
      std::vector<int> n = field_digits(f);
      std::vector<int> up = n;
      double amp = 1.0;
      bool inside = true;
      for (std::size_t j = 0; j < n.size(); ++j) {
        for (int r = 1; r <= k_[j]; ++r) {
          amp *= std::sqrt(static_cast<double>(n[j] + r));
        }
        up[j] = n[j] + k_[j];
        inside = inside && up[j] < dims_[j];
      }
      if (inside) {
        const int a = index(0, n);
        const int b = index(1, up);
        h(b, a) = amp;
        h(a, b) = amp;
      }
    }
    return h;
  }

  // C1 = (eps1 / 2) sigma_z + sum_j omega_j n_j with eps1 = sum_j k_j omega_j.
  Eigen::MatrixXd c1(const std::vector<double>& omega) const {
    double eps1 = 0.0;
    for (std::size_t j = 0; j < omega.size(); ++j) {
      eps1 += k_[j] * omega[j];
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim(), dim());
    for (int f = 0; f < field_dim_; ++f) {
      const std::vector<int> n = field_digits(f);
      double photons = 0.0;
      for (std::size_t j = 0; j < n.size(); ++j) {
        photons += omega[j] * n[j];
      }
      h(f, f) = 0.5 * eps1 + photons;
      h(field_dim_ + f, field_dim_ + f) = -0.5 * eps1 + photons;
    }
    return h;
  }

 private:
  std::vector<int> k_;
  std::vector<int> dims_;
  int field_dim_;
};

// exp(-i T H) psi for real symmetric H.
inline Eigen::VectorXcd expm_apply(const Eigen::MatrixXd& h, double T, const Eigen::VectorXcd& psi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const Eigen::MatrixXcd v = solver.eigenvectors().cast<cplx>();
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::exp(cplx(0.0, -T * solver.eigenvalues()(i)));
  }
  return v * phases.asDiagonal() * (v.adjoint() * psi);
}

}  // namespace oracle
