#ifndef BOSONIC_LINSPACE_HPP
#define BOSONIC_LINSPACE_HPP

// Finite-dimensional complex Hilbert space V = C^d in a fixed orthonormal
// basis e_1..e_d. Real-linear maps are split as v -> C v + A conj(v), and
// antilinear maps are stored as the matrix that multiplies conj(v).

#include <complex>

#include <Eigen/Dense>

namespace bosonic {

using cplx = std::complex<double>;
using HVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-10;

/// Inner product, antilinear in the first slot: sum_j conj(x_j) y_j.
cplx inner(const HVector& x, const HVector& y);

/// Symplectic form Im<x|y>.
double omega(const HVector& x, const HVector& y);

/// Symmetric antilinear operator Z v = M conj(v) on a complex space of
/// dimension n. Symmetry of Z in the Hilbert sense is M == M^T.
class SymAntilinear {
 public:
  SymAntilinear() = default;
  explicit SymAntilinear(CMatrix m);

  static SymAntilinear zero(Eigen::Index n);

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  HVector apply(const HVector& v) const;

  /// max |M - M^T|
  double symmetry_residual() const;
  bool is_symmetric(double tol = kDefaultTolerance) const { return symmetry_residual() <= tol; }

  /// Largest singular value of M, which is the antilinear operator norm.
  double spectral_norm() const;

  /// Matrix of the linear operator Z^2, v -> M conj(M) v.
  CMatrix square() const;

 private:
  CMatrix m_;
};

/// Real-linear operator on V stored as complex-linear part C and
/// antilinear part A: v -> C v + A conj(v).
class RealLinearMap {
 public:
  RealLinearMap() = default;
  RealLinearMap(CMatrix c, CMatrix a);

  static RealLinearMap identity(Eigen::Index d);
  static RealLinearMap conjugation(Eigen::Index d);

  /// Single-mode squeeze on mode j: cosh r on the diagonal of C, and
  /// e^{i phase} sinh r on the diagonal of A.
  static RealLinearMap squeeze(Eigen::Index d, Eigen::Index mode, double r, double phase = 0.0);
  static RealLinearMap unitary(const CMatrix& u);

  Eigen::Index dim() const { return c_.rows(); }
  const CMatrix& linear_part() const { return c_; }
  const CMatrix& antilinear_part() const { return a_; }

  HVector apply(const HVector& v) const;

  /// 2d x 2d real matrix acting on (Re v, Im v).
  Eigen::MatrixXd realify() const;
  static RealLinearMap from_real(const Eigen::MatrixXd& r);

 private:
  CMatrix c_;
  CMatrix a_;
};

HVector apply(const RealLinearMap& t, const HVector& v);

/// s o t
RealLinearMap compose(const RealLinearMap& s, const RealLinearMap& t);

/// Throws NumericalError when the realification is singular.
RealLinearMap invert(const RealLinearMap& t);

/// Max over the real basis {e_j, i e_j} of |Omega(g a, g b) - sign * Omega(a, b)|.
double omega_residual(const RealLinearMap& g, double sign);

bool is_symplectic(const RealLinearMap& g, double tol = kDefaultTolerance);
bool is_antisymplectic(const RealLinearMap& g, double tol = kDefaultTolerance);

struct LinearParts {
  CMatrix c;  // (g - JgJ)/2
  CMatrix a;  // (g + JgJ)/2, acting on conj(v)
};

/// Complex-linear and antilinear parts recovered from the action of g and
/// J = multiplication by i.
LinearParts split(const RealLinearMap& g);

enum class MapKind { symplectic, antisymplectic };

/// Z_g = C_g^{-1} A_g for a symplectic g, Z_g = A_g^{-1} C_g for an
/// antisymplectic one. Checks symmetry and ||Z_g|| < 1; for symplectic g it
/// also checks
///   C_{g^-1}^{-1} = Z_{g^-1} A_g + C_g   and   Z_{g^-1} C_g = -C_g Z_g.
/// Throws NumericalError if any of these fail beyond tol.
SymAntilinear z_of(const RealLinearMap& g, MapKind kind = MapKind::symplectic,
                   double tol = kDefaultTolerance);

struct ZIdentityResiduals {
  double symmetry = 0.0;
  double norm = 0.0;            // ||Z_g||
  double inverse_identity = 0.0;  // C_{g^-1}^{-1} - Z_{g^-1} A_g - C_g
  double commutation = 0.0;       // Z_{g^-1} C_g + C_g Z_g
};

/// Same quantities z_of checks, reported instead of thrown.
ZIdentityResiduals z_identity_residuals(const RealLinearMap& g, MapKind kind);

/// Unchecked Z_g matrix for the given kind.
CMatrix z_matrix(const RealLinearMap& g, MapKind kind);

}  // namespace bosonic

#endif  // BOSONIC_LINSPACE_HPP
