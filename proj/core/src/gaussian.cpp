#include "bosonic/gaussian.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bosonic/errors.hpp"

namespace bosonic {

Quadratic::Quadratic(DualTable table) : table_(std::move(table)) {
  const MonomialBasis& b = *table_.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.degree(i) != 2 && table_[i] != cplx{}) {
      throw DimensionError("Quadratic: table has values outside degree 2");
    }
  }
}

Quadratic quadratic_of(const SymAntilinear& z, int truncation, Space space, double tol) {
  if (!z.is_symmetric(tol)) {
    throw NumericalError("quadratic_of: Z is not symmetric (residual " +
                         std::to_string(z.symmetry_residual()) + ")");
  }
  const int n = static_cast<int>(z.dim());
  DualTable t = DualTable::zero(n, std::max(truncation, 2), space);
  const MonomialBasis& b = *t.basis();
  const CMatrix& m = z.matrix();
  for (std::size_t i = b.degree_begin(2); i < b.degree_begin(3); ++i) {
    auto e = b.exponents(i);
    int j = -1, k = -1;
    for (int v = 0; v < n; ++v) {
      if (e[v] == 2) j = k = v;
      if (e[v] == 1) (j < 0 ? j : k) = v;
    }
    t[i] = m(k, j);
  }
  return Quadratic(std::move(t));
}

SymAntilinear z_of_quadratic(const Quadratic& zeta) {
  // One table value per unordered pair {j, k}, so the result is symmetric.
  const int n = zeta.vars();
  const DualTable& t = zeta.table();
  const MonomialBasis& b = *t.basis();
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t i = b.degree_begin(2); i < b.degree_begin(3); ++i) {
    auto e = b.exponents(i);
    int j = -1, k = -1;
    for (int v = 0; v < n; ++v) {
      if (e[v] == 2) j = k = v;
      if (e[v] == 1) (j < 0 ? j : k) = v;
    }
    m(j, k) = t[i];
    m(k, j) = t[i];
  }
  return SymAntilinear(std::move(m));
}

DualTable gaussian_table(const SymAntilinear& z, int truncation, Space space, double tol) {
  if (!z.is_symmetric(tol)) {
    throw NumericalError("gaussian_table: Z is not symmetric (residual " +
                         std::to_string(z.symmetry_residual()) + ")");
  }
  const int n = static_cast<int>(z.dim());
  DualTable g = DualTable::zero(n, truncation, space);
  const MonomialBasis& b = *g.basis();
  const CMatrix& m = z.matrix();
  g[0] = 1.0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    auto gamma = b.exponents(i);
    int j = 0;
    while (gamma[j] == 0) ++j;
    const std::size_t a = b.lower(i, j);
    auto alpha = b.exponents(a);
    cplx s{};
    for (int k = 0; k < n; ++k) {
      if (alpha[k] == 0) continue;
      s += m(k, j) * static_cast<double>(alpha[k]) * g[b.lower(a, k)];
    }
    g[i] = s;
  }
  return g;
}

double gaussian_norm_sq_closed(const SymAntilinear& z) {
  const double norm = z.spectral_norm();
  if (!(norm < 1.0)) {
    throw NumericalError("gaussian_norm_sq_closed: ||Z|| = " + std::to_string(norm) +
                         " is not below 1");
  }
  const Eigen::Index n = z.dim();
  const cplx det = (CMatrix::Identity(n, n) - z.square()).determinant();
  if (std::abs(det.imag()) > 1e-10 || det.real() <= 0.0) {
    throw NumericalError("gaussian_norm_sq_closed: det(I - Z^2) is not real positive");
  }
  return 1.0 / std::sqrt(det.real());
}

double table_norm_sq(const DualTable& g) {
  const MonomialBasis& b = *g.basis();
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) s += std::norm(g[i]) / b.factorial(i);
  return s;
}

double gaussian_tail_bound(const SymAntilinear& z, int truncation) {
  const double s2 = std::pow(z.spectral_norm(), 2);
  if (s2 == 0.0) return 0.0;
  const double k = static_cast<double>(z.dim()) / 2.0;
  const int n0 = truncation / 2 + 1;  // first omitted even degree is 2 n0
  // b_n = Gamma(n + k) / (Gamma(k) n!) s^{2n};  b_{n+1}/b_n = (n + k)/(n + 1) s^2
  const double first =
      std::exp(std::lgamma(n0 + k) - std::lgamma(k) - std::lgamma(n0 + 1.0) + n0 * std::log(s2));
  const double ratio = s2 * std::max(1.0, (n0 + k) / (n0 + 1.0));
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return first / (1.0 - ratio);
}

double hs_norm(const SymAntilinear& z) {
  return z.matrix().norm();
}

double quadratic_norm(const Quadratic& zeta) {
  const DualTable& t = zeta.table();
  const MonomialBasis& b = *t.basis();
  double s = 0.0;
  for (std::size_t i = b.degree_begin(2); i < b.degree_begin(3); ++i) {
    s += std::norm(t[i]) / b.factorial(i);
  }
  return std::sqrt(s);
}

}  // namespace bosonic
