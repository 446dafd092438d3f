#include "bosonic/symalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bosonic/errors.hpp"

namespace bosonic {

namespace {

void require_vars(const GradedTable& t, Eigen::Index n, const char* what) {
  if (t.vars() != n) {
    throw DimensionError(std::string(what) + ": vector has dimension " + std::to_string(n) +
                         " but the table has " + std::to_string(t.vars()) + " variables");
  }
}

void require_same_shape(const GradedTable& a, const GradedTable& b, const char* what) {
  if (a.vars() != b.vars() || a.truncation() != b.truncation()) {
    throw DimensionError(std::string(what) + ": tables differ in variables or truncation");
  }
}

}  // namespace

// --- GradedTable -------------------------------------------------------------

GradedTable::GradedTable(BasisPtr basis, Space space)
    : basis_(std::move(basis)), space_(space),
      data_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()))) {}

GradedTable::GradedTable(BasisPtr basis, Eigen::VectorXcd data, Space space)
    : basis_(std::move(basis)), space_(space), data_(std::move(data)) {
  if (static_cast<std::size_t>(data_.size()) != basis_->size()) {
    throw DimensionError("GradedTable: data length does not match the basis");
  }
}

cplx GradedTable::at(std::span<const int> alpha) const {
  const std::size_t i = basis_->index(alpha);
  return i == npos ? cplx{} : (*this)[i];
}

void GradedTable::set(std::span<const int> alpha, cplx value) {
  const std::size_t i = basis_->index(alpha);
  if (i == npos) throw TruncationError("set: multi-index outside the truncation");
  (*this)[i] = value;
}

double GradedTable::max_abs(int max_degree) const {
  const std::size_t end = basis_->degree_begin(std::min(max_degree, truncation()) + 1);
  double m = 0.0;
  for (std::size_t i = 0; i < end; ++i) m = std::max(m, std::abs((*this)[i]));
  return m;
}

double max_abs_diff(const GradedTable& a, const GradedTable& b) {
  if (a.vars() != b.vars()) throw DimensionError("max_abs_diff: variable count mismatch");
  const int n = std::min(a.truncation(), b.truncation());
  // Shared degrees occupy the same leading index range in both bases.
  const std::size_t end = a.basis()->degree_begin(n + 1);
  double m = 0.0;
  for (std::size_t i = 0; i < end; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// --- PolyVector ----------------------------------------------------------------

PolyVector PolyVector::zero(int vars, int truncation, Space space) {
  return PolyVector(MonomialBasis::make(vars, truncation), space);
}

PolyVector PolyVector::one(int vars, int truncation, Space space) {
  PolyVector p = zero(vars, truncation, space);
  p[0] = 1.0;
  return p;
}

PolyVector PolyVector::monomial(int vars, int truncation, std::span<const int> alpha, cplx coeff,
                                Space space) {
  PolyVector p = zero(vars, truncation, space);
  p.set(alpha, coeff);
  return p;
}

PolyVector PolyVector::retruncate(int truncation) const {
  PolyVector out(MonomialBasis::make(vars(), truncation), space_);
  const std::size_t common = std::min(out.size(), size());
  out.data_.head(static_cast<Eigen::Index>(common)) = data_.head(static_cast<Eigen::Index>(common));
  return out;
}

PolyVector& PolyVector::operator+=(const PolyVector& other) {
  require_same_shape(*this, other, "PolyVector +=");
  data_ += other.data_;
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& other) {
  require_same_shape(*this, other, "PolyVector -=");
  data_ -= other.data_;
  return *this;
}

PolyVector& PolyVector::operator*=(cplx s) {
  data_ *= s;
  return *this;
}

int PolyVector::max_degree() const {
  for (std::size_t i = size(); i-- > 0;) {
    if ((*this)[i] != cplx{}) return basis_->degree(i);
  }
  return -1;
}

// --- DualTable ------------------------------------------------------------------

DualTable DualTable::zero(int vars, int truncation, Space space) {
  return DualTable(MonomialBasis::make(vars, truncation), space);
}

cplx DualTable::operator()(const PolyVector& psi) const {
  if (psi.vars() != vars()) throw DimensionError("DualTable evaluation: variable count mismatch");
  if (psi.max_degree() > truncation()) {
    throw TruncationError("DualTable evaluation: argument exceeds the table truncation");
  }
  const std::size_t end = std::min(size(), psi.size());
  cplx s{};
  for (std::size_t i = 0; i < end; ++i) s += std::conj(psi[i]) * (*this)[i];
  return s;
}

DualTable DualTable::restrict_to(int truncation) const {
  if (truncation > this->truncation()) {
    throw TruncationError("restrict_to: cannot extend a table beyond its truncation");
  }
  DualTable out(MonomialBasis::make(vars(), truncation), space_);
  out.data_ = data_.head(static_cast<Eigen::Index>(out.size()));
  return out;
}

DualTable& DualTable::operator+=(const DualTable& other) {
  require_same_shape(*this, other, "DualTable +=");
  data_ += other.data_;
  return *this;
}

DualTable& DualTable::operator-=(const DualTable& other) {
  require_same_shape(*this, other, "DualTable -=");
  data_ -= other.data_;
  return *this;
}

DualTable& DualTable::operator*=(cplx s) {
  data_ *= s;
  return *this;
}

// --- operations ---------------------------------------------------------------

cplx canonical_inner(const PolyVector& psi, const PolyVector& phi) {
  require_same_shape(psi, phi, "canonical_inner");
  const MonomialBasis& b = *psi.basis();
  cplx s{};
  for (std::size_t i = 0; i < b.size(); ++i) s += std::conj(psi[i]) * phi[i] * b.factorial(i);
  return s;
}

cplx inner_permanent_oracle(std::span<const HVector> xs, std::span<const HVector> ys) {
  if (xs.size() != ys.size()) throw DimensionError("inner_permanent_oracle: lists differ in length");
  if (xs.size() > 8) throw DimensionError("inner_permanent_oracle: at most 8 factors");
  std::vector<std::size_t> p(xs.size());
  std::iota(p.begin(), p.end(), 0);
  cplx total{};
  do {
    cplx term = 1.0;
    for (std::size_t j = 0; j < xs.size(); ++j) term *= inner(xs[j], ys[p[j]]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

PolyVector product_of_vectors(std::span<const HVector> xs, int truncation) {
  if (xs.empty() && truncation < 0) truncation = 0;
  if (truncation < 0) truncation = static_cast<int>(xs.size());
  const int vars = xs.empty() ? 1 : static_cast<int>(xs.front().size());
  PolyVector p = PolyVector::one(vars, truncation);
  for (const auto& x : xs) p = creator(x, p);
  return p;
}

PolyVector poly_product(const PolyVector& p, const PolyVector& q) {
  if (p.vars() != q.vars()) throw DimensionError("poly_product: variable count mismatch");
  const BasisPtr& base = p.truncation() >= q.truncation() ? p.basis() : q.basis();
  PolyVector out(base, p.space());
  const MonomialBasis& bp = *p.basis();
  const MonomialBasis& bq = *q.basis();
  std::vector<int> gamma(p.vars());
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (p[i] == cplx{}) continue;
    auto a = bp.exponents(i);
    for (std::size_t j = 0; j < bq.size(); ++j) {
      if (q[j] == cplx{}) continue;
      auto b = bq.exponents(j);
      for (int k = 0; k < p.vars(); ++k) gamma[k] = a[k] + b[k];
      const std::size_t idx = base->index(gamma);
      if (idx == npos) throw TruncationError("poly_product: product exceeds the truncation");
      out[idx] += p[i] * q[j];
    }
  }
  return out;
}

PolyVector creator(const HVector& v, const PolyVector& psi, Overflow overflow) {
  require_vars(psi, v.size(), "creator");
  const MonomialBasis& b = *psi.basis();
  PolyVector out(psi.basis(), psi.space());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const cplx c = psi[i];
    if (c == cplx{}) continue;
    for (int j = 0; j < b.vars(); ++j) {
      const std::size_t k = b.raise(i, j);
      if (k == npos) {
        if (overflow == Overflow::error && v(j) != cplx{}) {
          throw TruncationError("creator: result exceeds truncation degree " +
                                std::to_string(b.truncation()));
        }
        continue;
      }
      out[k] += v(j) * c;
    }
  }
  return out;
}

PolyVector annihilator(const HVector& v, const PolyVector& psi) {
  require_vars(psi, v.size(), "annihilator");
  const MonomialBasis& b = *psi.basis();
  PolyVector out(psi.basis(), psi.space());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const cplx c = psi[i];
    if (c == cplx{}) continue;
    auto e = b.exponents(i);
    for (int j = 0; j < b.vars(); ++j) {
      if (e[j] == 0) continue;
      out[b.lower(i, j)] += std::conj(v(j)) * static_cast<double>(e[j]) * c;
    }
  }
  return out;
}

DualTable dual_creator(const HVector& v, const DualTable& phi) {
  require_vars(phi, v.size(), "dual_creator");
  const MonomialBasis& b = *phi.basis();
  DualTable out(phi.basis(), phi.space());
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto e = b.exponents(i);
    cplx s{};
    for (int j = 0; j < b.vars(); ++j) {
      if (e[j] == 0) continue;
      s += v(j) * static_cast<double>(e[j]) * phi[b.lower(i, j)];
    }
    out[i] = s;
  }
  return out;
}

DualTable dual_annihilator(const HVector& v, const DualTable& phi) {
  require_vars(phi, v.size(), "dual_annihilator");
  if (phi.truncation() == 0) {
    throw TruncationError("dual_annihilator: a degree-0 table carries no information");
  }
  const MonomialBasis& b = *phi.basis();
  DualTable out(MonomialBasis::make(b.vars(), b.truncation() - 1), phi.space());
  for (std::size_t i = 0; i < out.size(); ++i) {
    cplx s{};
    for (int j = 0; j < b.vars(); ++j) s += std::conj(v(j)) * phi[b.raise(i, j)];
    out[i] = s;
  }
  return out;
}

DualTable embed(const PolyVector& phi) {
  const MonomialBasis& b = *phi.basis();
  DualTable out(phi.basis(), phi.space());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b.factorial(i) * phi[i];
  return out;
}

DualTable functional_product(const DualTable& phi, const DualTable& psi) {
  if (phi.vars() != psi.vars()) throw DimensionError("functional_product: variable count mismatch");
  const int n = std::min(phi.truncation(), psi.truncation());
  const BasisPtr& base = phi.truncation() == n ? phi.basis() : psi.basis();
  const MonomialBasis& b = *base;
  DualTable out(base, phi.space());
  const int vars = b.vars();

  // Enumerate beta <= alpha as an odometer; lower indices share the leading
  // index range, so both inputs are addressed through the same basis.
  std::vector<int> beta(vars), rest(vars);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto alpha = b.exponents(i);
    std::fill(beta.begin(), beta.end(), 0);
    cplx s{};
    while (true) {
      for (int j = 0; j < vars; ++j) rest[j] = alpha[j] - beta[j];
      const cplx f = phi[b.index(beta)];
      if (f != cplx{}) {
        const cplx g = psi[b.index(rest)];
        if (g != cplx{}) s += binomial(alpha, beta) * f * g;
      }
      int j = 0;
      while (j < vars && beta[j] == alpha[j]) beta[j++] = 0;
      if (j == vars) break;
      ++beta[j];
    }
    out[i] = s;
  }
  return out;
}

PolyVector number_apply(const PolyVector& psi) {
  PolyVector out = psi;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= static_cast<double>(psi.basis()->degree(i));
  return out;
}

DualTable number_apply(const DualTable& phi) {
  DualTable out = phi;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= static_cast<double>(phi.basis()->degree(i));
  return out;
}

PolyVector coherent(const HVector& x, int truncation) {
  PolyVector out = PolyVector::zero(static_cast<int>(x.size()), truncation);
  const MonomialBasis& b = *out.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto e = b.exponents(i);
    cplx c = 1.0 / b.factorial(i);
    for (int j = 0; j < b.vars(); ++j) {
      for (int k = 0; k < e[j]; ++k) c *= x(j);
    }
    out[i] = c;
  }
  return out;
}

CMatrix creator_matrix(const HVector& v, int truncation) {
  const BasisPtr b = MonomialBasis::make(static_cast<int>(v.size()), truncation);
  const auto n = static_cast<Eigen::Index>(b->size());
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < b->size(); ++i) {
    for (int j = 0; j < b->vars(); ++j) {
      const std::size_t k = b->raise(i, j);
      if (k != npos) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) += v(j);
    }
  }
  return m;
}

CMatrix annihilator_matrix(const HVector& v, int truncation) {
  const BasisPtr b = MonomialBasis::make(static_cast<int>(v.size()), truncation);
  const auto n = static_cast<Eigen::Index>(b->size());
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < b->size(); ++i) {
    auto e = b->exponents(i);
    for (int j = 0; j < b->vars(); ++j) {
      if (e[j] == 0) continue;
      m(static_cast<Eigen::Index>(b->lower(i, j)), static_cast<Eigen::Index>(i)) +=
          std::conj(v(j)) * static_cast<double>(e[j]);
    }
  }
  return m;
}

Eigen::VectorXd gram_diagonal(const MonomialBasis& basis) {
  Eigen::VectorXd g(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) g(static_cast<Eigen::Index>(i)) = basis.factorial(i);
  return g;
}

}  // namespace bosonic
