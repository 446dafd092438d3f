#ifndef BOSONIC_SYMALG_HPP
#define BOSONIC_SYMALG_HPP

// Truncated symmetric algebra SV over V = C^d in the monomial basis e^alpha,
// together with its antidual SV'. Polynomials carry coefficients; antidual
// elements carry their values on monomials, Phi[alpha] = Phi(e^alpha), and
// evaluate as Phi(psi) = sum_alpha conj(psi[alpha]) Phi[alpha].

#include <vector>

#include "bosonic/linspace.hpp"
#include "bosonic/monomial_basis.hpp"

namespace bosonic {

/// Which space the variables of a table refer to.
enum class Space { V, VC, VV };

/// Coefficient storage shared by polynomials and antidual tables.
class GradedTable {
 public:
  GradedTable() = default;
  explicit GradedTable(BasisPtr basis, Space space = Space::V);
  GradedTable(BasisPtr basis, Eigen::VectorXcd data, Space space = Space::V);

  const BasisPtr& basis() const { return basis_; }
  Space space() const { return space_; }
  int vars() const { return basis_->vars(); }
  int truncation() const { return basis_->truncation(); }
  std::size_t size() const { return basis_->size(); }

  cplx& operator[](std::size_t i) { return data_(static_cast<Eigen::Index>(i)); }
  const cplx& operator[](std::size_t i) const { return data_(static_cast<Eigen::Index>(i)); }

  /// Entry at alpha; zero for a multi-index outside the truncation.
  cplx at(std::span<const int> alpha) const;
  void set(std::span<const int> alpha, cplx value);

  const Eigen::VectorXcd& data() const { return data_; }
  Eigen::VectorXcd& data() { return data_; }

  /// Largest |entry| over degrees <= max_degree (all degrees by default).
  double max_abs(int max_degree = kMaxTableDegree) const;

 protected:
  BasisPtr basis_;
  Space space_ = Space::V;
  Eigen::VectorXcd data_;
};

/// Element of the truncated algebra: sum_alpha coeff[alpha] e^alpha.
class PolyVector : public GradedTable {
 public:
  using GradedTable::GradedTable;

  static PolyVector zero(int vars, int truncation, Space space = Space::V);
  static PolyVector one(int vars, int truncation, Space space = Space::V);
  static PolyVector monomial(int vars, int truncation, std::span<const int> alpha,
                             cplx coeff = 1.0, Space space = Space::V);

  /// Same polynomial in a basis with another truncation; dropping higher
  /// degrees when shrinking.
  PolyVector retruncate(int truncation) const;

  PolyVector& operator+=(const PolyVector& other);
  PolyVector& operator-=(const PolyVector& other);
  PolyVector& operator*=(cplx s);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(cplx s, PolyVector a) { return a *= s; }

  /// Highest degree carrying a nonzero coefficient (-1 for the zero vector).
  int max_degree() const;
};

/// Antilinear functional on the truncated algebra, stored as Phi(e^alpha).
class DualTable : public GradedTable {
 public:
  using GradedTable::GradedTable;

  static DualTable zero(int vars, int truncation, Space space = Space::V);

  /// Phi(psi) = sum_alpha conj(psi[alpha]) Phi[alpha] over the common degrees.
  cplx operator()(const PolyVector& psi) const;

  DualTable restrict_to(int truncation) const;

  DualTable& operator+=(const DualTable& other);
  DualTable& operator-=(const DualTable& other);
  DualTable& operator*=(cplx s);
  friend DualTable operator+(DualTable a, const DualTable& b) { return a += b; }
  friend DualTable operator-(DualTable a, const DualTable& b) { return a -= b; }
  friend DualTable operator*(cplx s, DualTable a) { return a *= s; }
};

/// max |a - b| over the degrees both tables cover.
double max_abs_diff(const GradedTable& a, const GradedTable& b);

/// <psi|phi> = sum_alpha conj(psi[alpha]) phi[alpha] alpha!
cplx canonical_inner(const PolyVector& psi, const PolyVector& phi);

/// sum over permutations p of prod_j <x_j | y_p(j)>, by explicit enumeration.
/// Independent of the monomial machinery; lists of length at most 8.
cplx inner_permanent_oracle(std::span<const HVector> xs, std::span<const HVector> ys);

/// Expands x_1 ... x_n into monomials (truncation = n unless given larger).
PolyVector product_of_vectors(std::span<const HVector> xs, int truncation = -1);

/// Algebra product in SV; throws TruncationError if a nonzero term would
/// exceed the truncation of the result (the larger of the two).
PolyVector poly_product(const PolyVector& p, const PolyVector& q);

enum class Overflow { error, drop };

/// c(v): multiplication by v. Degree-N input terms overflow the truncation;
/// Overflow::error throws TruncationError, Overflow::drop discards them.
PolyVector creator(const HVector& v, const PolyVector& psi, Overflow overflow = Overflow::error);

/// a(v): derivation with a(v) w = <v|w>; antilinear in v.
PolyVector annihilator(const HVector& v, const PolyVector& psi);

/// [c(v) Phi](psi) = Phi(a(v) psi). Keeps the truncation.
DualTable dual_creator(const HVector& v, const DualTable& phi);

/// [a(v) Phi](psi) = Phi(c(v) psi). The top degree of the input only feeds
/// the entry one below it, so the result is truncated one degree lower.
DualTable dual_annihilator(const HVector& v, const DualTable& phi);

/// phi -> <.|phi>, values alpha! phi[alpha].
DualTable embed(const PolyVector& phi);

/// Product induced by the coproduct:
///   [Phi Psi][alpha] = sum_{beta <= alpha} binom(alpha, beta) Phi[beta] Psi[alpha - beta].
/// Result truncation is the smaller of the two.
DualTable functional_product(const DualTable& phi, const DualTable& psi);

/// N | S^n V = n I
PolyVector number_apply(const PolyVector& psi);
DualTable number_apply(const DualTable& phi);

/// e^x = sum_n x^n / n!, truncated at degree N.
PolyVector coherent(const HVector& x, int truncation);

/// Matrix of c(v) / a(v) in the monomial coefficient basis; columns are the
/// images of e^beta with degree N overflow dropped.
CMatrix creator_matrix(const HVector& v, int truncation);
CMatrix annihilator_matrix(const HVector& v, int truncation);

/// diag(alpha!): the canonical Gram matrix of the monomial basis.
Eigen::VectorXd gram_diagonal(const MonomialBasis& basis);

}  // namespace bosonic

#endif  // BOSONIC_SYMALG_HPP
