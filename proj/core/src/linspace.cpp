#include "bosonic/linspace.hpp"

#include <algorithm>
#include <string>

#include "bosonic/errors.hpp"

namespace bosonic {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

void require_square(const CMatrix& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError(std::string(what) + ": expected a " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
  }
}

CMatrix checked_inverse(const CMatrix& m, const char* what) {
  Eigen::FullPivLU<CMatrix> lu(m);
  if (!lu.isInvertible()) {
    throw NumericalError(std::string(what) + " is not invertible");
  }
  return lu.inverse();
}

}  // namespace

cplx inner(const HVector& x, const HVector& y) {
  require_same_dim(x.size(), y.size(), "inner");
  return x.dot(y);  // Eigen conjugates the left operand
}

double omega(const HVector& x, const HVector& y) {
  return inner(x, y).imag();
}

// --- SymAntilinear ---------------------------------------------------------

SymAntilinear::SymAntilinear(CMatrix m) : m_(std::move(m)) {
  require_square(m_, m_.rows(), "SymAntilinear");
}

SymAntilinear SymAntilinear::zero(Eigen::Index n) {
  return SymAntilinear(CMatrix::Zero(n, n));
}

HVector SymAntilinear::apply(const HVector& v) const {
  require_same_dim(dim(), v.size(), "SymAntilinear::apply");
  return m_ * v.conjugate();
}

double SymAntilinear::symmetry_residual() const {
  if (m_.size() == 0) return 0.0;
  return (m_ - m_.transpose()).cwiseAbs().maxCoeff();
}

double SymAntilinear::spectral_norm() const {
  if (m_.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m_);
  return svd.singularValues()(0);
}

CMatrix SymAntilinear::square() const {
  return m_ * m_.conjugate();
}

// --- RealLinearMap ---------------------------------------------------------

RealLinearMap::RealLinearMap(CMatrix c, CMatrix a) : c_(std::move(c)), a_(std::move(a)) {
  if (c_.rows() < 1) throw DimensionError("RealLinearMap: dimension must be at least 1");
  require_square(c_, c_.rows(), "RealLinearMap linear part");
  require_square(a_, c_.rows(), "RealLinearMap antilinear part");
}

RealLinearMap RealLinearMap::identity(Eigen::Index d) {
  return {CMatrix::Identity(d, d), CMatrix::Zero(d, d)};
}

RealLinearMap RealLinearMap::conjugation(Eigen::Index d) {
  return {CMatrix::Zero(d, d), CMatrix::Identity(d, d)};
}

RealLinearMap RealLinearMap::squeeze(Eigen::Index d, Eigen::Index mode, double r, double phase) {
  if (mode < 0 || mode >= d) throw DimensionError("squeeze: mode out of range");
  CMatrix c = CMatrix::Identity(d, d);
  CMatrix a = CMatrix::Zero(d, d);
  c(mode, mode) = std::cosh(r);
  a(mode, mode) = std::polar(std::sinh(r), phase);
  return {std::move(c), std::move(a)};
}

RealLinearMap RealLinearMap::unitary(const CMatrix& u) {
  return {u, CMatrix::Zero(u.rows(), u.cols())};
}

HVector RealLinearMap::apply(const HVector& v) const {
  require_same_dim(dim(), v.size(), "RealLinearMap::apply");
  return c_ * v + a_ * v.conjugate();
}

Eigen::MatrixXd RealLinearMap::realify() const {
  const Eigen::Index d = dim();
  const Eigen::MatrixXd cr = c_.real(), ci = c_.imag(), ar = a_.real(), ai = a_.imag();
  Eigen::MatrixXd r(2 * d, 2 * d);
  r.topLeftCorner(d, d) = cr + ar;
  r.topRightCorner(d, d) = -ci + ai;
  r.bottomLeftCorner(d, d) = ci + ai;
  r.bottomRightCorner(d, d) = cr - ar;
  return r;
}

RealLinearMap RealLinearMap::from_real(const Eigen::MatrixXd& r) {
  if (r.rows() != r.cols() || r.rows() % 2 != 0 || r.rows() == 0) {
    throw DimensionError("from_real: expected a nonempty 2d x 2d matrix");
  }
  const Eigen::Index d = r.rows() / 2;
  const Eigen::MatrixXd p = r.topLeftCorner(d, d), q = r.topRightCorner(d, d);
  const Eigen::MatrixXd s = r.bottomLeftCorner(d, d), t = r.bottomRightCorner(d, d);
  CMatrix c(d, d), a(d, d);
  c.real() = (p + t) / 2.0;
  c.imag() = (s - q) / 2.0;
  a.real() = (p - t) / 2.0;
  a.imag() = (q + s) / 2.0;
  return {std::move(c), std::move(a)};
}

HVector apply(const RealLinearMap& t, const HVector& v) {
  return t.apply(v);
}

RealLinearMap compose(const RealLinearMap& s, const RealLinearMap& t) {
  require_same_dim(s.dim(), t.dim(), "compose");
  const CMatrix& sc = s.linear_part();
  const CMatrix& sa = s.antilinear_part();
  const CMatrix& tc = t.linear_part();
  const CMatrix& ta = t.antilinear_part();
  return {sc * tc + sa * ta.conjugate(), sc * ta + sa * tc.conjugate()};
}

RealLinearMap invert(const RealLinearMap& t) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(t.realify());
  if (!lu.isInvertible()) throw NumericalError("invert: real-linear map is singular");
  return RealLinearMap::from_real(lu.inverse());
}

double omega_residual(const RealLinearMap& g, double sign) {
  const Eigen::Index d = g.dim();
  std::vector<HVector> basis;
  std::vector<HVector> images;
  for (Eigen::Index j = 0; j < d; ++j) {
    HVector e = HVector::Zero(d);
    e(j) = 1.0;
    basis.push_back(e);
    basis.push_back(cplx(0.0, 1.0) * e);
  }
  for (const auto& b : basis) images.push_back(g.apply(b));
  double worst = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const double lhs = omega(images[a], images[b]);
      const double rhs = sign * omega(basis[a], basis[b]);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

bool is_symplectic(const RealLinearMap& g, double tol) {
  return omega_residual(g, 1.0) <= tol;
}

bool is_antisymplectic(const RealLinearMap& g, double tol) {
  return omega_residual(g, -1.0) <= tol;
}

LinearParts split(const RealLinearMap& g) {
  const Eigen::Index d = g.dim();
  const cplx i(0.0, 1.0);
  // Columns of the two parts from the action on e_j and J e_j:
  //   g e_j = C e_j + A e_j,  J g J e_j = i g(i e_j) = -C e_j + A e_j.
  LinearParts parts{CMatrix(d, d), CMatrix(d, d)};
  for (Eigen::Index j = 0; j < d; ++j) {
    HVector e = HVector::Zero(d);
    e(j) = 1.0;
    const HVector ge = g.apply(e);
    const HVector jgje = i * g.apply(i * e);
    parts.c.col(j) = (ge - jgje) / 2.0;
    parts.a.col(j) = (ge + jgje) / 2.0;
  }
  return parts;
}

CMatrix z_matrix(const RealLinearMap& g, MapKind kind) {
  const CMatrix& c = g.linear_part();
  const CMatrix& a = g.antilinear_part();
  if (kind == MapKind::symplectic) {
    // C^{-1} (A conj v)
    return checked_inverse(c, "linear part C_g") * a;
  }
  // A^{-1} as an antilinear inverse: w = A conj(v)  =>  v = conj(A^{-1}) conj(w).
  // Then v -> conj(A^{-1}) conj(C v) = conj(A^{-1} C) conj(v).
  return (checked_inverse(a, "antilinear part A_g") * c).conjugate();
}

ZIdentityResiduals z_identity_residuals(const RealLinearMap& g, MapKind kind) {
  ZIdentityResiduals out;
  const CMatrix m = z_matrix(g, kind);
  const SymAntilinear z(m);
  out.symmetry = z.symmetry_residual();
  out.norm = z.spectral_norm();
  if (kind == MapKind::symplectic) {
    const RealLinearMap ginv = invert(g);
    const CMatrix m_inv = z_matrix(ginv, kind);
    const CMatrix& c = g.linear_part();
    const CMatrix& a = g.antilinear_part();
    // Z_{g^-1} A_g : v -> M_inv conj(A conj v) = M_inv conj(A) v
    const CMatrix lhs = checked_inverse(ginv.linear_part(), "linear part C_{g^-1}");
    out.inverse_identity = (lhs - (m_inv * a.conjugate() + c)).cwiseAbs().maxCoeff();
    // Z_{g^-1} C_g : v -> M_inv conj(C) conj v ;  C_g Z_g : v -> C M conj v
    out.commutation = (m_inv * c.conjugate() + c * m).cwiseAbs().maxCoeff();
  }
  return out;
}

SymAntilinear z_of(const RealLinearMap& g, MapKind kind, double tol) {
  const ZIdentityResiduals r = z_identity_residuals(g, kind);
  if (r.symmetry > tol) {
    throw NumericalError("z_of: Z_g is not symmetric (residual " + std::to_string(r.symmetry) +
                         "); the map is not " +
                         (kind == MapKind::symplectic ? "symplectic" : "antisymplectic"));
  }
  if (!(r.norm < 1.0)) {
    throw NumericalError("z_of: ||Z_g|| = " + std::to_string(r.norm) + " is not below 1");
  }
  if (r.inverse_identity > tol || r.commutation > tol) {
    throw NumericalError("z_of: structural identities for C_g and Z_g fail");
  }
  return SymAntilinear(z_matrix(g, kind));
}

}  // namespace bosonic
