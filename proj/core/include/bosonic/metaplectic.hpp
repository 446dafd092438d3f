#ifndef BOSONIC_METAPLECTIC_HPP
#define BOSONIC_METAPLECTIC_HPP

// Weak metaplectic operators. For a symplectic g the operator U_g with
// U_g pi(v) = pi(g v) U_g has the Gaussian kernel u_g = e^Z, where the
// symmetric antilinear Z on V_C acts by
//
//   Z(v+) = (C_g^{-1} v)- + (Z_{g^-1} v)+
//   Z(v-) = (C_{g^-1}^{-1} v)+ + (Z_g v)-
//
// With v+ = (v, 0), v- = (0, conj v) and Z w = M conj(w) these rules fix the
// blocks of M uniquely:
//
//   Z(v, 0)      = (M11 conj v, M21 conj v)  =>  M11 = M_{g^-1},  M21 = conj(C_g^{-1})
//   Z(0, conj v) = (M12 v, M22 v)            =>  M12 = C_{g^-1}^{-1}, M22 = conj(M_g)
//
// where M_g is the matrix of Z_g. M12 = M21^T because C_{g^-1} = C_g^dagger.
//
// For an antisymplectic g the kernel lives in S(V (+) V)' with
//
//   Z(v1) = (Z_g v)1 + (A_{g^-1}^{-1} v)2
//   Z(v2) = (A_g^{-1} v)1 + (Z_{g^-1} v)2
//
// and v1 = (v, 0), v2 = (0, v). The antilinear inverse of v -> A conj v has
// matrix conj(A^{-1}), so
//
//   M11 = M_g,  M21 = conj(A_{g^-1}^{-1}),  M12 = conj(A_g^{-1}),  M22 = M_{g^-1}.
//
// U_g is normalized by U_g 1 (1) = 1. The Shale factor is kept separate.

#include <optional>

#include "bosonic/kernelcalc.hpp"
#include "bosonic/linspace.hpp"

namespace bosonic {

struct SymplecticPack {
  RealLinearMap g;
  RealLinearMap g_inv;
  MapKind kind = MapKind::symplectic;
  CMatrix c;      // C_g
  CMatrix a;      // A_g
  CMatrix c_inv;  // C_g^{-1} (symplectic) or the matrix of A_g^{-1} (antisymplectic)
  SymAntilinear z_g;
  SymAntilinear z_ginv;
};

/// Validates the Omega condition for the kind, then fills every field and
/// checks the invariants of z_of. Throws NumericalError on failure.
SymplecticPack pack(const RealLinearMap& g, MapKind kind = MapKind::symplectic,
                    double tol = kDefaultTolerance);

/// The symmetric antilinear Z on V_C (2d x 2d). Throws NumericalError if the
/// assembled matrix is asymmetric or fails the defining rules.
SymAntilinear metaplectic_Z(const SymplecticPack& p, double tol = kDefaultTolerance);

/// Residual of the two defining rules of metaplectic_Z over the real basis.
double metaplectic_rule_residual(const SymplecticPack& p, const SymAntilinear& z);

/// u_g = e^Z at doubled truncation `truncation`.
Kernel metaplectic_kernel(const SymplecticPack& p, int truncation);

/// Kernel-level intertwining relations, both truncated one degree lower:
///   a(v-) u - c(C v)+ u - a(A v)+ u
///   c(v-) u - c(A v)+ u - a(C v)+ u
std::pair<DualTable, DualTable> intertwine_defects(const SymplecticPack& p, const DualTable& u,
                                                   const HVector& v);

struct IntertwineReport {
  // Both read in the orthonormal basis: entries divided by sqrt(alpha! beta!).
  double kernel_residual = 0.0;    // max entry of both kernel-level defects
  double operator_residual = 0.0;  // U c(v) vs {c(Cv) + a(Av)} U on matrices
  double max() const { return std::max(kernel_residual, operator_residual); }
};

IntertwineReport verify_intertwine(const SymplecticPack& p, const Kernel& u, const HVector& v);

/// Max of verify_intertwine over v in {e_j, i e_j}.
double intertwine_residual(const SymplecticPack& p, const Kernel& u);

/// det(I - Z_g^2)^{1/4}
double shale_constant(const SymplecticPack& p);

/// exp 1/2 {2 <C_g^{-1} x|y> + <x|Z_{g^-1} x> + <Z_g y|y>}
cplx coherent_element_closed(const SymplecticPack& p, const HVector& x, const HVector& y);

/// <e^x | U e^y> from the kernel table: u(e^x+ e^y-), with both coherent
/// vectors truncated at floor(N/2).
cplx coherent_element_truncated(const Kernel& u, const HVector& x, const HVector& y);

/// exp(|x||y|)(|x||y|)^{n+1}/(n+1)!: the tail of the identity kernel's
/// coherent series. Only a bound when g is unitary.
double coherent_identity_tail_bound(const HVector& x, const HVector& y, int n);
/// Rigorous bound on |closed - truncated| for a kernel built at degree 2n.
double coherent_tail_bound(const SymplecticPack& p, const HVector& x, const HVector& y, int n);

struct UniquenessReport {
  Eigen::Index unknowns = 0;
  Eigen::Index null_dimension = 0;
  double largest_singular = 0.0;
  double smallest_kept = 0.0;     // smallest singular value counted in the rank
  double largest_dropped = 0.0;   // largest singular value treated as zero
};

/// Solution space of the intertwining relations over all kernel tables of
/// total degree <= truncation, for v in {e_j, i e_j}. The relations are
/// assembled from p's C and A parts only; the Omega condition is not
/// re-checked, so non-symplectic input is allowed here.
UniquenessReport uniqueness_report(const SymplecticPack& p, int truncation,
                                   double relative_threshold = 1e-9);
bool uniqueness_check(const SymplecticPack& p, int truncation);

/// Assembles a pack from raw parts without the symplectic checks; used for
/// negative controls against uniqueness_report.
SymplecticPack unchecked_pack(const RealLinearMap& g);

struct GramReport {
  CMatrix gram;               // <U e^b | U e^b'> on degrees <= max_degree
  double vacuum = 0.0;        // gram(0, 0) = [1|1]
  double predicted = 0.0;     // det(I - Z_g^2)^{-1/2}
  double scaled_deviation = 0.0;    // max |B - predicted G| / (predicted sqrt(b! b'!))
  double proportional_deviation = 0.0;  // same with B(0,0) in place of predicted
  double adjointness_residual = 0.0;    // [c(v) psi|phi] - [psi|a(v) phi], normalized
  double tail_estimate = 0.0;  // size of the last two omitted shells, normalized
};

/// Gram matrix of U_g images of monomials with |b| <= max_degree, summing
/// over |alpha| <= truncation - max_degree, compared with the canonical Gram.
GramReport scaled_isometry(const SymplecticPack& p, const Kernel& u, int max_degree);

/// Symmetric antilinear Z on V (+) V for an antisymplectic pack.
SymAntilinear anti_Z(const SymplecticPack& p, double tol = kDefaultTolerance);
double anti_rule_residual(const SymplecticPack& p, const SymAntilinear& z);
AntiKernel anti_kernel(const SymplecticPack& p, int truncation);

/// Relations for U c(v) = {a(C v) + c(A v)} U and U a(v) = {a(A v) + c(C v)} U:
///   a(v1) u - a(C v)2 u - c(A v)2 u
///   c(v1) u - a(A v)2 u - c(C v)2 u
std::pair<DualTable, DualTable> anti_intertwine_defects(const SymplecticPack& p,
                                                        const DualTable& u, const HVector& v);
/// Largest defect entry divided by sqrt(alpha! beta!).
double verify_anti_intertwine(const SymplecticPack& p, const AntiKernel& u, const HVector& v);
double anti_intertwine_residual(const SymplecticPack& p, const AntiKernel& u);

/// det(I - Z_g^2)^{1/4} with Z_g = A_g^{-1} C_g.
double anti_shale_constant(const SymplecticPack& p);

/// Gram report for antiunitary images: predicted = c^-2 with
/// c = anti_shale_constant; the Gram is real-symmetric against conj<e^a|e^a'>,
/// which coincides with <e^a|e^a'> on the monomial basis. No adjointness part.
GramReport antiunitarity_report(const SymplecticPack& p, const AntiKernel& u, int max_degree);

/// max |c^2 <U e^a|U e^a'> - conj<e^a|e^a'>| / sqrt(a! a'!) on |a| <= max_degree,
/// with c = anti_shale_constant.
double antiunitarity_residual(const SymplecticPack& p, const AntiKernel& u, int max_degree);

/// Matrix of pi(v) = (c(v) + a(v)) / sqrt 2 on the monomial basis of degree
/// <= N; the degree N + 1 part of c(v) is dropped.
CMatrix field_operator(const HVector& v, int truncation);

}  // namespace bosonic

#endif  // BOSONIC_METAPLECTIC_HPP
