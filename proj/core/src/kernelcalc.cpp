#include "bosonic/kernelcalc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bosonic/errors.hpp"
#include "bosonic/gaussian.hpp"

namespace bosonic {

namespace {

int half_vars(const DualTable& t) {
  if (t.vars() % 2 != 0) throw DimensionError("kernel table needs an even number of variables");
  return t.vars() / 2;
}

}  // namespace

// --- DoubledTable --------------------------------------------------------------

DoubledTable::DoubledTable(int d, int truncation, Space space)
    : table_(DualTable::zero(2 * d, truncation, space)),
      index_(std::make_shared<const DoubledIndex>(d, truncation)) {}

DoubledTable::DoubledTable(DualTable table)
    : table_(std::move(table)),
      index_(std::make_shared<const DoubledIndex>(half_vars(table_), table_.truncation())) {}

cplx DoubledTable::entry(std::size_t alpha, std::size_t beta) const {
  const std::size_t i = index_->join(alpha, beta);
  return i == npos ? cplx{} : table_[i];
}

cplx DoubledTable::entry(std::span<const int> alpha, std::span<const int> beta) const {
  const MonomialBasis& h = *index_->half();
  const std::size_t a = h.index(alpha);
  const std::size_t b = h.index(beta);
  if (a == npos || b == npos) return {};
  return entry(a, b);
}

Kernel::Kernel(DualTable table) : DoubledTable(std::move(table)) {
  table_ = DualTable(table_.basis(), table_.data(), Space::VC);
}

AntiKernel::AntiKernel(DualTable table) : DoubledTable(std::move(table)) {
  table_ = DualTable(table_.basis(), table_.data(), Space::VV);
}

double max_abs_diff(const DoubledTable& a, const DoubledTable& b) {
  return max_abs_diff(a.table(), b.table());
}

double normalized_max_abs_diff(const DoubledTable& a, const DoubledTable& b) {
  if (a.d() != b.d()) throw DimensionError("normalized_max_abs_diff: dimension mismatch");
  const int n = std::min(a.truncation(), b.truncation());
  const MonomialBasis& basis = *a.index().doubled();
  double worst = 0.0;
  for (std::size_t i = 0; i < MonomialBasis::count_upto(2 * a.d(), n); ++i) {
    worst = std::max(worst, std::abs(a.table()[i] - b.table()[i]) / std::sqrt(basis.factorial(i)));
  }
  return worst;
}

// --- linear kernels ------------------------------------------------------------

DualTable apply_kernel(const Kernel& u, const PolyVector& phi) {
  if (phi.vars() != u.d()) throw DimensionError("apply_kernel: dimension mismatch");
  const int deg = std::max(phi.max_degree(), 0);
  if (deg > u.truncation()) throw TruncationError("apply_kernel: argument degree exceeds the kernel");
  DualTable out = DualTable::zero(u.d(), u.truncation() - deg);
  const DoubledIndex& ix = u.index();
  const DualTable& t = u.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t a = ix.first(i);
    const std::size_t b = ix.second(i);
    if (a >= out.size() || b >= phi.size()) continue;
    out[a] += phi[b] * t[i];
  }
  return out;
}

cplx pair_kernel(const Kernel& u, const PolyVector& psi, const PolyVector& phi) {
  if (psi.vars() != u.d() || phi.vars() != u.d()) {
    throw DimensionError("pair_kernel: dimension mismatch");
  }
  if (std::max(psi.max_degree(), 0) + std::max(phi.max_degree(), 0) > u.truncation()) {
    throw TruncationError("pair_kernel: arguments exceed the kernel truncation");
  }
  const DoubledIndex& ix = u.index();
  const DualTable& t = u.table();
  cplx s{};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t a = ix.first(i);
    const std::size_t b = ix.second(i);
    if (a >= psi.size() || b >= phi.size()) continue;
    s += std::conj(psi[a]) * phi[b] * t[i];
  }
  return s;
}

CMatrix matrix_of_kernel(const Kernel& u) {
  const DoubledIndex& ix = u.index();
  const auto n = static_cast<Eigen::Index>(ix.half()->size());
  CMatrix e = CMatrix::Zero(n, n);
  const DualTable& t = u.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    e(static_cast<Eigen::Index>(ix.first(i)), static_cast<Eigen::Index>(ix.second(i))) = t[i];
  }
  return e;
}

Kernel kernel_of_matrix(const CMatrix& e, int d, int truncation) {
  Kernel u(d, truncation);
  const DoubledIndex& ix = u.index();
  const auto n = static_cast<Eigen::Index>(ix.half()->size());
  if (e.rows() != n || e.cols() != n) throw DimensionError("kernel_of_matrix: wrong matrix size");
  DualTable& t = u.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = e(static_cast<Eigen::Index>(ix.first(i)), static_cast<Eigen::Index>(ix.second(i)));
  }
  return u;
}

Kernel adjoint_kernel(const Kernel& u) {
  return Kernel(star_table(u.table()));
}

Kernel compose_creator_left(const HVector& v, const Kernel& u) {
  return Kernel(dual_creator(plus(v), u.table()));
}

Kernel compose_annihilator_left(const HVector& v, const Kernel& u) {
  return Kernel(dual_annihilator(plus(v), u.table()));
}

Kernel compose_creator_right(const Kernel& u, const HVector& v) {
  return Kernel(dual_annihilator(minus(v), u.table()));
}

Kernel compose_annihilator_right(const Kernel& u, const HVector& v) {
  return Kernel(dual_creator(minus(v), u.table()));
}

Kernel identity_kernel(int d, int truncation) {
  return Kernel(gaussian_table(preferred_quadratic(d), truncation, Space::VC));
}

Kernel number_kernel(int d, int truncation) {
  const Quadratic zeta = quadratic_of(preferred_quadratic(d), truncation, Space::VC);
  return Kernel(functional_product(zeta.table(), identity_kernel(d, truncation).table()));
}

Kernel rank_one(const DualTable& psi, const DualTable& phi, int truncation) {
  if (psi.vars() != phi.vars()) throw DimensionError("rank_one: dimension mismatch");
  Kernel u(psi.vars(), truncation);
  const DoubledIndex& ix = u.index();
  DualTable& t = u.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t a = ix.first(i);
    const std::size_t b = ix.second(i);
    const cplx pa = a < psi.size() ? psi[a] : cplx{};
    const cplx pb = b < phi.size() ? phi[b] : cplx{};
    t[i] = pa * std::conj(pb);
  }
  return u;
}

// --- antilinear kernels --------------------------------------------------------

HVector first_copy(const HVector& v) {
  HVector w = HVector::Zero(2 * v.size());
  w.head(v.size()) = v;
  return w;
}

HVector second_copy(const HVector& v) {
  HVector w = HVector::Zero(2 * v.size());
  w.tail(v.size()) = v;
  return w;
}

DualTable apply_antikernel(const AntiKernel& u, const PolyVector& phi) {
  if (phi.vars() != u.d()) throw DimensionError("apply_antikernel: dimension mismatch");
  const int deg = std::max(phi.max_degree(), 0);
  if (deg > u.truncation()) {
    throw TruncationError("apply_antikernel: argument degree exceeds the kernel");
  }
  DualTable out = DualTable::zero(u.d(), u.truncation() - deg);
  const DoubledIndex& ix = u.index();
  const DualTable& t = u.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t a = ix.first(i);
    const std::size_t b = ix.second(i);
    if (a >= phi.size() || b >= out.size()) continue;
    out[b] += std::conj(phi[a]) * t[i];
  }
  return out;
}

CMatrix matrix_of_antikernel(const AntiKernel& u) {
  // E(beta, alpha) = [U e^alpha](e^beta), columns indexed by the argument.
  const DoubledIndex& ix = u.index();
  const auto n = static_cast<Eigen::Index>(ix.half()->size());
  CMatrix e = CMatrix::Zero(n, n);
  const DualTable& t = u.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    e(static_cast<Eigen::Index>(ix.second(i)), static_cast<Eigen::Index>(ix.first(i))) = t[i];
  }
  return e;
}

AntiKernel anti_compose_creator_right(const AntiKernel& u, const HVector& v) {
  return AntiKernel(dual_annihilator(first_copy(v), u.table()));
}

AntiKernel anti_compose_creator_left(const HVector& v, const AntiKernel& u) {
  return AntiKernel(dual_creator(second_copy(v), u.table()));
}

AntiKernel anti_compose_annihilator_right(const AntiKernel& u, const HVector& v) {
  return AntiKernel(dual_creator(first_copy(v), u.table()));
}

AntiKernel anti_compose_annihilator_left(const HVector& v, const AntiKernel& u) {
  return AntiKernel(dual_annihilator(second_copy(v), u.table()));
}

}  // namespace bosonic
