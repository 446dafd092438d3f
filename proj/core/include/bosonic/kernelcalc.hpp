#ifndef BOSONIC_KERNELCALC_HPP
#define BOSONIC_KERNELCALC_HPP

// Kernels of linear maps SV -> SV' live in SV_C', antilinear ones in
// S(V (+) V)'. Both are stored as tables over 2d variables; the entry at the
// doubled index (alpha, beta) is
//
//   linear:      u(e+^alpha e-^beta)  = [U e^beta](e^alpha)
//   antilinear:  u(e1^alpha e2^beta)  = [U e^alpha](e^beta)
//
// with no factorial weights folded in. A table of total degree N acts
// exactly on polynomials of degree k, producing tables of degree N - k.

#include <memory>

#include "bosonic/complexify.hpp"
#include "bosonic/symalg.hpp"

namespace bosonic {

/// Table over a doubled index set together with its (alpha, beta) bookkeeping.
class DoubledTable {
 public:
  DoubledTable(int d, int truncation, Space space);
  explicit DoubledTable(DualTable table);

  const DualTable& table() const { return table_; }
  DualTable& table() { return table_; }
  const DoubledIndex& index() const { return *index_; }
  int d() const { return index_->d(); }
  int truncation() const { return table_.truncation(); }

  /// Entry at (alpha, beta) given as half-basis indices; zero beyond the
  /// truncation.
  cplx entry(std::size_t alpha, std::size_t beta) const;
  cplx entry(std::span<const int> alpha, std::span<const int> beta) const;

 protected:
  DualTable table_;
  std::shared_ptr<const DoubledIndex> index_;
};

class Kernel : public DoubledTable {
 public:
  Kernel(int d, int truncation) : DoubledTable(d, truncation, Space::VC) {}
  explicit Kernel(DualTable table);
};

class AntiKernel : public DoubledTable {
 public:
  AntiKernel(int d, int truncation) : DoubledTable(d, truncation, Space::VV) {}
  explicit AntiKernel(DualTable table);
};

double max_abs_diff(const DoubledTable& a, const DoubledTable& b);
/// Same over common degrees, entries divided by sqrt(alpha! beta!): the
/// difference of matrix elements in the orthonormal basis.
double normalized_max_abs_diff(const DoubledTable& a, const DoubledTable& b);

/// U phi as an antidual table: (U phi)[alpha] = sum_beta phi[beta] u[(alpha, beta)].
/// The result has truncation N - deg(phi).
DualTable apply_kernel(const Kernel& u, const PolyVector& phi);

/// u(psi+ phi-) = sum conj(psi[alpha]) phi[beta] u[(alpha, beta)].
cplx pair_kernel(const Kernel& u, const PolyVector& psi, const PolyVector& phi);

/// Evaluation matrix E(alpha, beta) = [U e^beta](e^alpha), indexed by the
/// basis in d variables at the kernel truncation. Entries with
/// |alpha| + |beta| above the truncation are zero.
CMatrix matrix_of_kernel(const Kernel& u);
/// Inverse of matrix_of_kernel; entries beyond the truncation are ignored.
Kernel kernel_of_matrix(const CMatrix& e, int d, int truncation);

/// Kernel of U*: u*[(alpha, beta)] = conj(u[(beta, alpha)]).
Kernel adjoint_kernel(const Kernel& u);

/// c(v) U  <->  c(v+) u
Kernel compose_creator_left(const HVector& v, const Kernel& u);
/// a(v) U  <->  a(v+) u   (one degree lower)
Kernel compose_annihilator_left(const HVector& v, const Kernel& u);
/// U c(v)  <->  a(v-) u   (one degree lower)
Kernel compose_creator_right(const Kernel& u, const HVector& v);
/// U a(v)  <->  c(v-) u
Kernel compose_annihilator_right(const Kernel& u, const HVector& v);

/// e^{Z_V}; entries delta_{alpha beta} alpha!.
Kernel identity_kernel(int d, int truncation);

/// zeta_V e^{Z_V}; entries delta_{alpha beta} |alpha| alpha!.
Kernel number_kernel(int d, int truncation);

/// Psi+ Phi-, the kernel of phi -> conj(Phi(phi)) Psi:
///   u[(alpha, beta)] = Psi[alpha] conj(Phi[beta]).
Kernel rank_one(const DualTable& psi, const DualTable& phi, int truncation);

/// Antilinear U phi: (U phi)[beta] = sum_alpha conj(phi[alpha]) u[(alpha, beta)].
DualTable apply_antikernel(const AntiKernel& u, const PolyVector& phi);

CMatrix matrix_of_antikernel(const AntiKernel& u);

/// U c(v)  <->  a(v1) u
AntiKernel anti_compose_creator_right(const AntiKernel& u, const HVector& v);
/// c(v) U  <->  c(v2) u
AntiKernel anti_compose_creator_left(const HVector& v, const AntiKernel& u);
/// U a(v)  <->  c(v1) u
AntiKernel anti_compose_annihilator_right(const AntiKernel& u, const HVector& v);
/// a(v) U  <->  a(v2) u
AntiKernel anti_compose_annihilator_left(const HVector& v, const AntiKernel& u);

/// (v, 0) and (0, v) in V (+) V.
HVector first_copy(const HVector& v);
HVector second_copy(const HVector& v);

}  // namespace bosonic

#endif  // BOSONIC_KERNELCALC_HPP
