#ifndef BOSONIC_MONOMIAL_BASIS_HPP
#define BOSONIC_MONOMIAL_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace bosonic {

/// Largest truncation degree accepted for vectors in a workspace.
inline constexpr int kMaxTruncation = 30;
/// Largest total degree of any table; kernels use twice the vector degree.
inline constexpr int kMaxTableDegree = 2 * kMaxTruncation;

using MultiIndex = std::vector<int>;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

int degree(std::span<const int> alpha);

/// alpha! = prod_j alpha_j!
double factorial(std::span<const int> alpha);
double factorial(int n);

/// prod_j binom(alpha_j, beta_j)
double binomial(std::span<const int> alpha, std::span<const int> beta);

/// Monomials e^alpha in `vars` variables with total degree <= `truncation`,
/// enumerated by degree and, inside a degree, in descending lexicographic
/// order of the exponent vector: 1, e_1, e_2, e_1^2, e_1 e_2, e_2^2, ...
///
/// Immutable after construction; all shift tables are precomputed.
class MonomialBasis {
 public:
  MonomialBasis(int vars, int truncation);

  static std::shared_ptr<const MonomialBasis> make(int vars, int truncation);

  int vars() const { return vars_; }
  int truncation() const { return truncation_; }
  std::size_t size() const { return degree_.size(); }

  std::span<const int> exponents(std::size_t i) const {
    return {exps_.data() + i * static_cast<std::size_t>(vars_), static_cast<std::size_t>(vars_)};
  }
  MultiIndex multi_index(std::size_t i) const;
  int degree(std::size_t i) const { return degree_[i]; }
  double factorial(std::size_t i) const { return fact_[i]; }

  /// Index of alpha, or npos if alpha is out of range.
  std::size_t index(std::span<const int> alpha) const;

  /// Index of alpha + delta_j (npos above the truncation).
  std::size_t raise(std::size_t i, int j) const { return up_[i * vars_ + j]; }
  /// Index of alpha - delta_j (npos if alpha_j == 0).
  std::size_t lower(std::size_t i, int j) const { return down_[i * vars_ + j]; }

  /// First index of degree n; degree_begin(truncation + 1) == size().
  std::size_t degree_begin(int n) const;

  /// Number of monomials in `vars` variables of total degree <= n.
  static std::size_t count_upto(int vars, int n);

  friend bool operator==(const MonomialBasis& a, const MonomialBasis& b) {
    return a.vars_ == b.vars_ && a.truncation_ == b.truncation_;
  }

 private:
  std::size_t rank(std::span<const int> alpha, int deg) const;

  int vars_;
  int truncation_;
  std::vector<int> exps_;
  std::vector<int> degree_;
  std::vector<double> fact_;
  std::vector<std::size_t> up_;
  std::vector<std::size_t> down_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

}  // namespace bosonic

#endif  // BOSONIC_MONOMIAL_BASIS_HPP
