#include "bosonic/metaplectic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Sparse>

#include "bosonic/errors.hpp"
#include "bosonic/gaussian.hpp"

namespace bosonic {

namespace {

CMatrix inverse_or_throw(const CMatrix& m, const char* what) {
  Eigen::FullPivLU<CMatrix> lu(m);
  if (!lu.isInvertible()) throw NumericalError(std::string(what) + " is not invertible");
  return lu.inverse();
}

std::vector<HVector> real_basis(Eigen::Index d) {
  std::vector<HVector> out;
  for (Eigen::Index j = 0; j < d; ++j) {
    HVector e = HVector::Zero(d);
    e(j) = 1.0;
    out.push_back(e);
    out.push_back(cplx(0.0, 1.0) * e);
  }
  return out;
}

double det_quarter(const SymAntilinear& z) {
  const Eigen::Index n = z.dim();
  const cplx det = (CMatrix::Identity(n, n) - z.square()).determinant();
  if (std::abs(det.imag()) > 1e-10 || det.real() <= 0.0) {
    throw NumericalError("det(I - Z_g^2) is not real positive");
  }
  return std::pow(det.real(), 0.25);
}

// Entries (alpha, beta) of an evaluation matrix with |alpha| + |beta| <= n.
double max_abs_on(const CMatrix& m, const MonomialBasis& h, int n) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (h.degree(static_cast<std::size_t>(r)) + h.degree(static_cast<std::size_t>(c)) > n) continue;
      const double w = std::sqrt(h.factorial(static_cast<std::size_t>(r)) * h.factorial(static_cast<std::size_t>(c)));
      worst = std::max(worst, std::abs(m(r, c)) / w);
    }
  }
  return worst;
}

// max |t[g]| / sqrt(g!): a kernel-shaped table read in the orthonormal basis.
double normalized_max(const DualTable& t) {
  const MonomialBasis& b = *t.basis();
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) worst = std::max(worst, std::abs(t[i]) / std::sqrt(b.factorial(i)));
  return worst;
}

}  // namespace

SymplecticPack pack(const RealLinearMap& g, MapKind kind, double tol) {
  const double sign = kind == MapKind::symplectic ? 1.0 : -1.0;
  const double residual = omega_residual(g, sign);
  if (residual > tol) {
    throw NumericalError(std::string("pack: map is not ") +
                         (kind == MapKind::symplectic ? "symplectic" : "antisymplectic") +
                         " (Omega residual " + std::to_string(residual) + ")");
  }
  SymplecticPack p;
  p.g = g;
  p.kind = kind;
  p.g_inv = invert(g);
  p.c = g.linear_part();
  p.a = g.antilinear_part();
  if (kind == MapKind::symplectic) {
    p.c_inv = inverse_or_throw(p.c, "pack: C_g");
  } else {
    p.c_inv = inverse_or_throw(p.a, "pack: A_g").conjugate();
  }
  p.z_g = z_of(g, kind, tol);
  p.z_ginv = z_of(p.g_inv, kind, tol);
  return p;
}

SymplecticPack unchecked_pack(const RealLinearMap& g) {
  SymplecticPack p;
  p.g = g;
  p.c = g.linear_part();
  p.a = g.antilinear_part();
  return p;
}

SymAntilinear metaplectic_Z(const SymplecticPack& p, double tol) {
  if (p.kind != MapKind::symplectic) throw NumericalError("metaplectic_Z: pack is not symplectic");
  const Eigen::Index d = p.g.dim();
  CMatrix m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = p.z_ginv.matrix();
  m.topRightCorner(d, d) = inverse_or_throw(p.g_inv.linear_part(), "C_{g^-1}");
  m.bottomLeftCorner(d, d) = p.c_inv.conjugate();
  m.bottomRightCorner(d, d) = p.z_g.matrix().conjugate();
  SymAntilinear z(std::move(m));
  if (!z.is_symmetric(tol)) {
    throw NumericalError("metaplectic_Z: assembled Z is not symmetric (residual " +
                         std::to_string(z.symmetry_residual()) + ")");
  }
  const double rules = metaplectic_rule_residual(p, z);
  if (rules > tol) {
    throw NumericalError("metaplectic_Z: defining rules fail (residual " + std::to_string(rules) + ")");
  }
  return z;
}

double metaplectic_rule_residual(const SymplecticPack& p, const SymAntilinear& z) {
  const CMatrix c_ginv_inv = inverse_or_throw(p.g_inv.linear_part(), "C_{g^-1}");
  double worst = 0.0;
  for (const HVector& v : real_basis(p.g.dim())) {
    const HVector lhs_plus = z.apply(plus(v));
    const HVector rhs_plus = minus(p.c_inv * v) + plus(p.z_ginv.apply(v));
    const HVector lhs_minus = z.apply(minus(v));
    const HVector rhs_minus = plus(c_ginv_inv * v) + minus(p.z_g.apply(v));
    worst = std::max({worst, (lhs_plus - rhs_plus).cwiseAbs().maxCoeff(),
                      (lhs_minus - rhs_minus).cwiseAbs().maxCoeff()});
  }
  return worst;
}

Kernel metaplectic_kernel(const SymplecticPack& p, int truncation) {
  return Kernel(gaussian_table(metaplectic_Z(p), truncation, Space::VC));
}

std::pair<DualTable, DualTable> intertwine_defects(const SymplecticPack& p, const DualTable& u,
                                                   const HVector& v) {
  const int top = u.truncation() - 1;
  const HVector cv = p.c * v;
  const HVector av = p.a * v.conjugate();
  DualTable first = dual_annihilator(minus(v), u);
  first -= dual_creator(plus(cv), u).restrict_to(top);
  first -= dual_annihilator(plus(av), u);
  DualTable second = dual_creator(minus(v), u).restrict_to(top);
  second -= dual_creator(plus(av), u).restrict_to(top);
  second -= dual_annihilator(plus(cv), u);
  return {std::move(first), std::move(second)};
}

IntertwineReport verify_intertwine(const SymplecticPack& p, const Kernel& u, const HVector& v) {
  IntertwineReport r;
  const auto [first, second] = intertwine_defects(p, u.table(), v);
  r.kernel_residual = std::max(normalized_max(first), normalized_max(second));

  // U c(v) = {c(C v) + a(A v)} U on evaluation matrices.
  const int n = u.truncation();
  const CMatrix e = matrix_of_kernel(u);
  const HVector cv = p.c * v;
  const HVector av = p.a * v.conjugate();
  using Sparse = Eigen::SparseMatrix<cplx>;
  const Sparse cm = creator_matrix(v, n).sparseView();
  const Sparse am_cv = annihilator_matrix(cv, n).sparseView();
  const Sparse cm_av = creator_matrix(av, n).sparseView();
  const CMatrix lhs = e * cm;
  const CMatrix rhs = Sparse(am_cv.adjoint()) * e + Sparse(cm_av.adjoint()) * e;
  r.operator_residual = max_abs_on(lhs - rhs, *u.index().half(), n - 1);
  return r;
}

double intertwine_residual(const SymplecticPack& p, const Kernel& u) {
  double worst = 0.0;
  for (const HVector& v : real_basis(u.d())) worst = std::max(worst, verify_intertwine(p, u, v).max());
  return worst;
}

double shale_constant(const SymplecticPack& p) {
  return det_quarter(p.z_g);
}

cplx coherent_element_closed(const SymplecticPack& p, const HVector& x, const HVector& y) {
  const cplx exponent =
      2.0 * inner(p.c_inv * x, y) + inner(x, p.z_ginv.apply(x)) + inner(p.z_g.apply(y), y);
  return std::exp(0.5 * exponent);
}

cplx coherent_element_truncated(const Kernel& u, const HVector& x, const HVector& y) {
  const int n = u.truncation() / 2;
  return pair_kernel(u, coherent(x, n), coherent(y, n));
}

double coherent_identity_tail_bound(const HVector& x, const HVector& y, int n) {
  const double t = x.norm() * y.norm();
  if (t == 0.0) return 0.0;
  return std::exp(t + (n + 1) * std::log(t) - std::lgamma(n + 2.0));
}

double coherent_tail_bound(const SymplecticPack& p, const HVector& x, const HVector& y, int n) {
  // |u[g]| is dominated by the Gaussian table of |K| (the recursion has
  // nonnegative structure), whose generating function is exp(r^T |K| r / 2).
  // Terms dropped by the truncation have x-degree > n or y-degree > n;
  // each family is bounded by lambda^-(n+1) times the majorant with that
  // block scaled by lambda >= 1, minimised over a log grid.
  const Eigen::MatrixXd k = metaplectic_Z(p).matrix().cwiseAbs();
  const Eigen::Index d = x.size();
  const Eigen::VectorXd ax = x.cwiseAbs(), ay = y.cwiseAbs();
  auto family = [&](bool scale_x) {
    double best = std::numeric_limits<double>::infinity();
    for (int step = 0; step <= 400; ++step) {
      const double lambda = std::exp(step * 0.015);
      Eigen::VectorXd r(2 * d);
      r.head(d) = scale_x ? (lambda * ax).eval() : ax;
      r.tail(d) = scale_x ? ay : (lambda * ay).eval();
      const double log_bound = 0.5 * r.dot(k * r) - (n + 1) * std::log(lambda);
      best = std::min(best, log_bound);
    }
    return std::exp(best);
  };
  if (ax.sum() == 0.0 && ay.sum() == 0.0) return 0.0;
  return family(true) + family(false);
}

UniquenessReport uniqueness_report(const SymplecticPack& p, int truncation, double relative_threshold) {
  const int d = static_cast<int>(p.c.rows());
  const BasisPtr basis = MonomialBasis::make(2 * d, truncation);
  const auto unknowns = static_cast<Eigen::Index>(basis->size());
  const auto per_relation = static_cast<Eigen::Index>(MonomialBasis::count_upto(2 * d, truncation - 1));
  const std::vector<HVector> vs = real_basis(d);
  const Eigen::Index rows = per_relation * 2 * static_cast<Eigen::Index>(vs.size());

  CMatrix system = CMatrix::Zero(rows, unknowns);
  for (Eigen::Index col = 0; col < unknowns; ++col) {
    DualTable unit(basis, Space::VC);
    unit[static_cast<std::size_t>(col)] = 1.0;
    Eigen::Index row = 0;
    for (const HVector& v : vs) {
      const auto [first, second] = intertwine_defects(p, unit, v);
      system.block(row, col, per_relation, 1) = first.data();
      row += per_relation;
      system.block(row, col, per_relation, 1) = second.data();
      row += per_relation;
    }
  }

  Eigen::BDCSVD<CMatrix> svd(system);
  const Eigen::VectorXd& s = svd.singularValues();
  UniquenessReport r;
  r.unknowns = unknowns;
  r.largest_singular = s.size() ? s(0) : 0.0;
  const double cut = relative_threshold * r.largest_singular;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) {
      ++rank;
      r.smallest_kept = s(i);
    } else {
      r.largest_dropped = std::max(r.largest_dropped, s(i));
    }
  }
  r.null_dimension = unknowns - rank;
  return r;
}

bool uniqueness_check(const SymplecticPack& p, int truncation) {
  return uniqueness_report(p, truncation).null_dimension == 1;
}

namespace {

// Gram matrix of the columns of e (images of e^b, |b| <= max_degree) under
// the alpha!-pairing over |alpha| <= n - max_degree, compared with
// predicted * delta b!.
GramReport gram_of_images(const MonomialBasis& h, const CMatrix& e, int n, int max_degree, double predicted) {
  const auto cols = static_cast<Eigen::Index>(h.degree_begin(max_degree + 1));
  const auto rows = static_cast<Eigen::Index>(h.degree_begin(n - max_degree + 1));
  const auto rows_short = static_cast<Eigen::Index>(h.degree_begin(n - max_degree - 1));

  Eigen::VectorXd inv_fact(rows);
  for (Eigen::Index i = 0; i < rows; ++i) inv_fact(i) = 1.0 / h.factorial(static_cast<std::size_t>(i));
  const CMatrix block = e.topLeftCorner(rows, cols);
  GramReport r;
  r.gram = block.adjoint() * inv_fact.asDiagonal() * block;
  const CMatrix short_gram = block.topRows(rows_short).adjoint() *
                             inv_fact.head(rows_short).asDiagonal() * block.topRows(rows_short);

  r.vacuum = r.gram(0, 0).real();
  r.predicted = predicted;
  for (Eigen::Index i = 0; i < cols; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double w = std::sqrt(h.factorial(static_cast<std::size_t>(i)) * h.factorial(static_cast<std::size_t>(j)));
      const double g = i == j ? h.factorial(static_cast<std::size_t>(i)) : 0.0;
      r.scaled_deviation = std::max(r.scaled_deviation, std::abs(r.gram(i, j) - r.predicted * g) / (r.predicted * w));
      r.proportional_deviation = std::max(r.proportional_deviation, std::abs(r.gram(i, j) - r.vacuum * g) / (r.vacuum * w));
      r.tail_estimate = std::max(r.tail_estimate, std::abs(r.gram(i, j) - short_gram(i, j)) / (r.predicted * w));
    }
  }
  return r;
}

}  // namespace

GramReport scaled_isometry(const SymplecticPack& p, const Kernel& u, int max_degree) {
  const int n = u.truncation();
  if (2 * max_degree > n) throw TruncationError("scaled_isometry: kernel truncation too small");
  const MonomialBasis& h = *u.index().half();
  GramReport r = gram_of_images(h, matrix_of_kernel(u), n, max_degree, std::pow(shale_constant(p), -2.0));

  // [c(v) psi|phi] = [psi|a(v) phi] on degrees < max_degree.
  const auto inner_cols = static_cast<Eigen::Index>(h.degree_begin(max_degree));
  for (const HVector& v : real_basis(u.d())) {
    const CMatrix cm = creator_matrix(v, max_degree);
    const CMatrix am = annihilator_matrix(v, max_degree);
    const CMatrix& b = r.gram;
    const CMatrix diff = (cm.adjoint() * b - b * am).topLeftCorner(inner_cols, inner_cols);
    for (Eigen::Index i = 0; i < inner_cols; ++i) {
      for (Eigen::Index j = 0; j < inner_cols; ++j) {
        const double w = std::sqrt(h.factorial(static_cast<std::size_t>(i)) * h.factorial(static_cast<std::size_t>(j)));
        r.adjointness_residual = std::max(r.adjointness_residual, std::abs(diff(i, j)) / (r.predicted * w));
      }
    }
  }
  return r;
}

// --- antisymplectic ----------------------------------------------------------------

SymAntilinear anti_Z(const SymplecticPack& p, double tol) {
  if (p.kind != MapKind::antisymplectic) throw NumericalError("anti_Z: pack is not antisymplectic");
  const Eigen::Index d = p.g.dim();
  CMatrix m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = p.z_g.matrix();
  m.topRightCorner(d, d) = p.c_inv;  // matrix of A_g^{-1}
  m.bottomLeftCorner(d, d) = inverse_or_throw(p.g_inv.antilinear_part(), "A_{g^-1}").conjugate();
  m.bottomRightCorner(d, d) = p.z_ginv.matrix();
  SymAntilinear z(std::move(m));
  if (!z.is_symmetric(tol)) {
    throw NumericalError("anti_Z: assembled Z is not symmetric (residual " +
                         std::to_string(z.symmetry_residual()) + ")");
  }
  const double rules = anti_rule_residual(p, z);
  if (rules > tol) {
    throw NumericalError("anti_Z: defining rules fail (residual " + std::to_string(rules) + ")");
  }
  return z;
}

double anti_rule_residual(const SymplecticPack& p, const SymAntilinear& z) {
  // Antilinear inverses act as v -> matrix * conj(v).
  const CMatrix a_ginv_inv = inverse_or_throw(p.g_inv.antilinear_part(), "A_{g^-1}").conjugate();
  double worst = 0.0;
  for (const HVector& v : real_basis(p.g.dim())) {
    const HVector lhs1 = z.apply(first_copy(v));
    const HVector rhs1 = first_copy(p.z_g.apply(v)) + second_copy(a_ginv_inv * v.conjugate());
    const HVector lhs2 = z.apply(second_copy(v));
    const HVector rhs2 = first_copy(p.c_inv * v.conjugate()) + second_copy(p.z_ginv.apply(v));
    worst = std::max({worst, (lhs1 - rhs1).cwiseAbs().maxCoeff(), (lhs2 - rhs2).cwiseAbs().maxCoeff()});
  }
  return worst;
}

AntiKernel anti_kernel(const SymplecticPack& p, int truncation) {
  return AntiKernel(gaussian_table(anti_Z(p), truncation, Space::VV));
}

std::pair<DualTable, DualTable> anti_intertwine_defects(const SymplecticPack& p, const DualTable& u,
                                                        const HVector& v) {
  const int top = u.truncation() - 1;
  const HVector cv = p.c * v;
  const HVector av = p.a * v.conjugate();
  DualTable first = dual_annihilator(first_copy(v), u);
  first -= dual_annihilator(second_copy(cv), u);
  first -= dual_creator(second_copy(av), u).restrict_to(top);
  DualTable second = dual_creator(first_copy(v), u).restrict_to(top);
  second -= dual_annihilator(second_copy(av), u);
  second -= dual_creator(second_copy(cv), u).restrict_to(top);
  return {std::move(first), std::move(second)};
}

double verify_anti_intertwine(const SymplecticPack& p, const AntiKernel& u, const HVector& v) {
  const auto [first, second] = anti_intertwine_defects(p, u.table(), v);
  return std::max(normalized_max(first), normalized_max(second));
}

double anti_intertwine_residual(const SymplecticPack& p, const AntiKernel& u) {
  double worst = 0.0;
  for (const HVector& v : real_basis(u.d())) worst = std::max(worst, verify_anti_intertwine(p, u, v));
  return worst;
}

double anti_shale_constant(const SymplecticPack& p) {
  if (p.kind != MapKind::antisymplectic) {
    throw NumericalError("anti_shale_constant: pack is not antisymplectic");
  }
  return det_quarter(p.z_g);
}

GramReport antiunitarity_report(const SymplecticPack& p, const AntiKernel& u, int max_degree) {
  const int n = u.truncation();
  if (2 * max_degree > n) throw TruncationError("antiunitarity_report: kernel truncation too small");
  // column alpha of the matrix is U e^alpha
  return gram_of_images(*u.index().half(), matrix_of_antikernel(u), n, max_degree,
                        std::pow(anti_shale_constant(p), -2.0));
}

double antiunitarity_residual(const SymplecticPack& p, const AntiKernel& u, int max_degree) {
  return antiunitarity_report(p, u, max_degree).scaled_deviation;
}

CMatrix field_operator(const HVector& v, int truncation) {
  return (creator_matrix(v, truncation) + annihilator_matrix(v, truncation)) / std::sqrt(2.0);
}

}  // namespace bosonic
