#include "bosonic/random.hpp"

#include <cmath>
#include <numbers>

namespace bosonic {

namespace {

cplx gaussian(Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale / std::sqrt(2.0));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

HVector random_vector(Rng& rng, Eigen::Index d, double scale) {
  HVector v(d);
  for (Eigen::Index j = 0; j < d; ++j) v(j) = gaussian(rng, scale);
  return v;
}

HVector random_vector_with_norm(Rng& rng, Eigen::Index d, double norm) {
  HVector v = random_vector(rng, d);
  while (v.norm() == 0.0) v = random_vector(rng, d);
  return v * (norm / v.norm());
}

CMatrix random_unitary(Rng& rng, Eigen::Index d) {
  CMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = gaussian(rng, 1.0);
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution does not depend on QR conventions.
  for (Eigen::Index j = 0; j < d; ++j) {
    const cplx rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

SymAntilinear random_symmetric(Rng& rng, Eigen::Index n, double spectral_norm) {
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      m(i, j) = gaussian(rng, 1.0);
      m(j, i) = m(i, j);
    }
  }
  const double s = SymAntilinear(m).spectral_norm();
  if (s > 0.0) m *= spectral_norm / s;
  return SymAntilinear(std::move(m));
}

RealLinearMap random_symplectic(Rng& rng, Eigen::Index d, double max_z_norm) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r_max = std::atanh(max_z_norm);
  RealLinearMap g = RealLinearMap::unitary(random_unitary(rng, d));
  for (Eigen::Index j = 0; j < d; ++j) {
    const double r = r_max * unit(rng);
    const double phase = 2.0 * std::numbers::pi * unit(rng);
    g = compose(g, RealLinearMap::squeeze(d, j, r, phase));
  }
  return compose(g, RealLinearMap::unitary(random_unitary(rng, d)));
}

RealLinearMap random_antisymplectic(Rng& rng, Eigen::Index d, double max_z_norm) {
  return compose(RealLinearMap::conjugation(d), random_symplectic(rng, d, max_z_norm));
}

PolyVector random_poly(Rng& rng, int vars, int truncation, int max_degree) {
  PolyVector p = PolyVector::zero(vars, truncation);
  const std::size_t end = p.basis()->degree_begin(std::min(max_degree, truncation) + 1);
  for (std::size_t i = 0; i < end; ++i) p[i] = gaussian(rng, 1.0) / std::sqrt(p.basis()->factorial(i));
  return p;
}

DualTable random_table(Rng& rng, int vars, int truncation, Space space) {
  DualTable t = DualTable::zero(vars, truncation, space);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = gaussian(rng, 1.0) / std::sqrt(t.basis()->factorial(i));
  return t;
}

}  // namespace bosonic
