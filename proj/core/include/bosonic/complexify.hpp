#ifndef BOSONIC_COMPLEXIFY_HPP
#define BOSONIC_COMPLEXIFY_HPP

// The complexification V_C = V+ (+) V- realized as C^{2d}: the first d
// coordinates refer to e+_j = (e_j)+, the last d to e-_j = (e_j)-. With this
// choice v+ = (v, 0) and v- = (0, conj v), both Gram matrices are identities,
// and the canonical conjugation swaps the two blocks.
//
// The doubled space V (+) V used for antilinear kernels uses the same 2d
// layout with plain linear inclusions v1 = (v, 0), v2 = (0, v).

#include <utility>

#include "bosonic/gaussian.hpp"
#include "bosonic/symalg.hpp"

namespace bosonic {

HVector plus(const HVector& v);
HVector minus(const HVector& v);

/// Canonical conjugation on V_C: (a, b) -> (conj b, conj a).
HVector conj_vc(const HVector& w);

/// e^alpha -> e+^alpha, coefficients unchanged.
PolyVector plus_poly(const PolyVector& psi);
/// e^alpha -> e-^alpha, coefficients conjugated.
PolyVector minus_poly(const PolyVector& phi);

/// Involution on SV_C: e+^a e-^b -> e+^b e-^a with conjugated coefficient.
PolyVector conj_star(const PolyVector& theta);
/// u*[(a, b)] = conj(u[(b, a)])
DualTable star_table(const DualTable& u);

/// Z_V, the canonical conjugation as a symmetric antilinear operator on V_C;
/// matrix [[0, I], [I, 0]].
SymAntilinear preferred_quadratic(int d);

PolyVector inject1(const PolyVector& phi);
PolyVector inject2(const PolyVector& psi);

/// Index bookkeeping between a basis in 2d variables and pairs of indices in
/// the basis of d variables. For table entry i of the doubled basis,
/// first(i) / second(i) index the two halves in `half` (truncated at the
/// doubled truncation).
class DoubledIndex {
 public:
  DoubledIndex(int d, int truncation);

  const BasisPtr& doubled() const { return doubled_; }
  const BasisPtr& half() const { return half_; }
  int d() const { return d_; }

  std::size_t first(std::size_t i) const { return first_[i]; }
  std::size_t second(std::size_t i) const { return second_[i]; }

  /// Doubled index of (alpha, beta) given half-basis indices; npos when
  /// |alpha| + |beta| exceeds the truncation.
  std::size_t join(std::size_t alpha, std::size_t beta) const;

  static std::string key(std::span<const int> alpha, std::span<const int> beta);

 private:
  int d_;
  BasisPtr doubled_;
  BasisPtr half_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> second_;
};

/// Product of a polynomial in the first block variables and one in the
/// second: (sum p[a] e1^a)(sum q[b] e2^b) in 2d variables at `truncation`.
PolyVector block_product(const PolyVector& first, const PolyVector& second, int truncation);

}  // namespace bosonic

#endif  // BOSONIC_COMPLEXIFY_HPP
