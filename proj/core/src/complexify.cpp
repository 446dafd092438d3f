#include "bosonic/complexify.hpp"

#include <string>

#include "bosonic/errors.hpp"

namespace bosonic {

namespace {

// Copies a polynomial in d variables into the first (offset 0) or second
// (offset d) block of 2d variables, optionally conjugating coefficients.
PolyVector to_block(const PolyVector& p, int offset, bool conjugate, Space space) {
  const int d = p.vars();
  PolyVector out = PolyVector::zero(2 * d, p.truncation(), space);
  const MonomialBasis& b = *p.basis();
  std::vector<int> gamma(2 * d, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto e = b.exponents(i);
    std::fill(gamma.begin(), gamma.end(), 0);
    std::copy(e.begin(), e.end(), gamma.begin() + offset);
    out.set(gamma, conjugate ? std::conj(p[i]) : p[i]);
  }
  return out;
}

int half_dim(Eigen::Index n, const char* what) {
  if (n % 2 != 0) throw DimensionError(std::string(what) + ": expected an even dimension");
  return static_cast<int>(n / 2);
}

}  // namespace

HVector plus(const HVector& v) {
  HVector w = HVector::Zero(2 * v.size());
  w.head(v.size()) = v;
  return w;
}

HVector minus(const HVector& v) {
  HVector w = HVector::Zero(2 * v.size());
  w.tail(v.size()) = v.conjugate();
  return w;
}

HVector conj_vc(const HVector& w) {
  const int d = half_dim(w.size(), "conj_vc");
  HVector out(w.size());
  out.head(d) = w.tail(d).conjugate();
  out.tail(d) = w.head(d).conjugate();
  return out;
}

PolyVector plus_poly(const PolyVector& psi) {
  return to_block(psi, 0, false, Space::VC);
}

PolyVector minus_poly(const PolyVector& phi) {
  return to_block(phi, phi.vars(), true, Space::VC);
}

PolyVector conj_star(const PolyVector& theta) {
  const int d = half_dim(theta.vars(), "conj_star");
  const MonomialBasis& b = *theta.basis();
  PolyVector out(theta.basis(), theta.space());
  std::vector<int> swapped(2 * d);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto e = b.exponents(i);
    std::copy(e.begin() + d, e.end(), swapped.begin());
    std::copy(e.begin(), e.begin() + d, swapped.begin() + d);
    out[b.index(swapped)] = std::conj(theta[i]);
  }
  return out;
}

DualTable star_table(const DualTable& u) {
  const int d = half_dim(u.vars(), "star_table");
  const MonomialBasis& b = *u.basis();
  DualTable out(u.basis(), u.space());
  std::vector<int> swapped(2 * d);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto e = b.exponents(i);
    std::copy(e.begin() + d, e.end(), swapped.begin());
    std::copy(e.begin(), e.begin() + d, swapped.begin() + d);
    out[i] = std::conj(u[b.index(swapped)]);
  }
  return out;
}

SymAntilinear preferred_quadratic(int d) {
  CMatrix m = CMatrix::Zero(2 * d, 2 * d);
  m.topRightCorner(d, d).setIdentity();
  m.bottomLeftCorner(d, d).setIdentity();
  return SymAntilinear(std::move(m));
}

PolyVector inject1(const PolyVector& phi) {
  return to_block(phi, 0, false, Space::VV);
}

PolyVector inject2(const PolyVector& psi) {
  return to_block(psi, psi.vars(), false, Space::VV);
}

// --- DoubledIndex ---------------------------------------------------------------

DoubledIndex::DoubledIndex(int d, int truncation)
    : d_(d), doubled_(MonomialBasis::make(2 * d, truncation)), half_(MonomialBasis::make(d, truncation)) {
  first_.resize(doubled_->size());
  second_.resize(doubled_->size());
  for (std::size_t i = 0; i < doubled_->size(); ++i) {
    auto e = doubled_->exponents(i);
    first_[i] = half_->index(e.subspan(0, d));
    second_[i] = half_->index(e.subspan(d, d));
  }
}

std::size_t DoubledIndex::join(std::size_t alpha, std::size_t beta) const {
  if (half_->degree(alpha) + half_->degree(beta) > doubled_->truncation()) return npos;
  std::vector<int> gamma(2 * d_);
  auto a = half_->exponents(alpha);
  auto b = half_->exponents(beta);
  std::copy(a.begin(), a.end(), gamma.begin());
  std::copy(b.begin(), b.end(), gamma.begin() + d_);
  return doubled_->index(gamma);
}

std::string DoubledIndex::key(std::span<const int> alpha, std::span<const int> beta) {
  std::string s;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(alpha[j]);
  }
  s += ';';
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(beta[j]);
  }
  return s;
}

PolyVector block_product(const PolyVector& first, const PolyVector& second, int truncation) {
  if (first.vars() != second.vars()) throw DimensionError("block_product: variable count mismatch");
  const int d = first.vars();
  PolyVector out = PolyVector::zero(2 * d, truncation, first.space());
  const MonomialBasis& b1 = *first.basis();
  const MonomialBasis& b2 = *second.basis();
  std::vector<int> gamma(2 * d);
  for (std::size_t i = 0; i < b1.size(); ++i) {
    if (first[i] == cplx{}) continue;
    auto a = b1.exponents(i);
    std::copy(a.begin(), a.end(), gamma.begin());
    for (std::size_t j = 0; j < b2.size(); ++j) {
      if (second[j] == cplx{}) continue;
      if (b1.degree(i) + b2.degree(j) > truncation) {
        throw TruncationError("block_product: product exceeds the truncation");
      }
      auto c = b2.exponents(j);
      std::copy(c.begin(), c.end(), gamma.begin() + d);
      out.set(gamma, first[i] * second[j]);
    }
  }
  return out;
}

}  // namespace bosonic
