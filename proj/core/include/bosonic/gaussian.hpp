#ifndef BOSONIC_GAUSSIAN_HPP
#define BOSONIC_GAUSSIAN_HPP

#include "bosonic/linspace.hpp"
#include "bosonic/symalg.hpp"

namespace bosonic {

/// Degree-2 antidual element zeta, stored as a table vanishing off degree 2.
class Quadratic {
 public:
  explicit Quadratic(DualTable table);

  const DualTable& table() const { return table_; }
  int vars() const { return table_.vars(); }

 private:
  DualTable table_;
};

/// zeta(e_j e_k) = <e_k | Z e_j> = M(k, j). The table has truncation 2
/// unless a larger one is requested. Throws NumericalError if M != M^T.
Quadratic quadratic_of(const SymAntilinear& z, int truncation = 2, Space space = Space::V,
                       double tol = kDefaultTolerance);

/// Inverse of quadratic_of.
SymAntilinear z_of_quadratic(const Quadratic& zeta);

/// e^Z as an antidual table, from the annihilator recursion
///   G[0] = 1,   G[alpha + delta_j] = sum_k M(k, j) alpha_k G[alpha - delta_k],
/// which is a(e_j) e^Z = (Z e_j) e^Z read off entrywise.
DualTable gaussian_table(const SymAntilinear& z, int truncation, Space space = Space::V,
                         double tol = kDefaultTolerance);

/// <e^Z|e^Z> = det(I - M conj M)^{-1/2}. Requires ||Z|| < 1; throws
/// NumericalError if the determinant has an imaginary part above 1e-10.
double gaussian_norm_sq_closed(const SymAntilinear& z);

/// sum_alpha |G[alpha]|^2 / alpha! over the table.
double table_norm_sq(const DualTable& g);

/// Bound on the part of <e^Z|e^Z> beyond total degree `truncation`, from the
/// dominating series (1 - s^2 t)^{-n/2} with s = ||Z||, summed geometrically.
double gaussian_tail_bound(const SymAntilinear& z, int truncation);

double hs_norm(const SymAntilinear& z);
/// Canonical norm of zeta: sqrt(sum_{|alpha| = 2} |zeta[alpha]|^2 / alpha!).
double quadratic_norm(const Quadratic& zeta);

}  // namespace bosonic

#endif  // BOSONIC_GAUSSIAN_HPP
