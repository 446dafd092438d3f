#include <doctest.h>

#include <cmath>

#include "bosonic/errors.hpp"
#include "bosonic/kernelcalc.hpp"
#include "bosonic/random.hpp"
#include "helpers.hpp"

using namespace bosonic;
using testing::I;
using testing::unit;

namespace {

// max |E_k(a, b) - expected(a, b)| over |a| + |b| <= truncation of k, where
// E_k is the evaluation matrix of k and expected is indexed in the same
// (larger or equal) half basis.
template <typename K>
double compare_matrix(const K& k, const CMatrix& e_k, const CMatrix& expected) {
  const MonomialBasis& h = *k.index().half();
  double worst = 0.0;
  for (Eigen::Index r = 0; r < e_k.rows(); ++r) {
    for (Eigen::Index c = 0; c < e_k.cols(); ++c) {
      if (h.degree(static_cast<std::size_t>(r)) + h.degree(static_cast<std::size_t>(c)) > k.truncation()) continue;
      worst = std::max(worst, std::abs(e_k(r, c) - expected(r, c)));
    }
  }
  return worst;
}

CMatrix top(const CMatrix& m, const Kernel& k) {
  const auto n = static_cast<Eigen::Index>(k.index().half()->size());
  return m.topLeftCorner(n, n);
}

CMatrix top(const CMatrix& m, const AntiKernel& k) {
  const auto n = static_cast<Eigen::Index>(k.index().half()->size());
  return m.topLeftCorner(n, n);
}

}  // namespace

TEST_SUITE("kernelcalc") {
  TEST_CASE("apply_kernel examples") {
    const Kernel id = identity_kernel(2, 6);
    const PolyVector e1 = PolyVector::monomial(2, 6, MultiIndex{1, 0});
    const DualTable out = apply_kernel(id, e1);
    CHECK(out.truncation() == 5);
    CHECK(max_abs_diff(out, embed(e1.retruncate(5))) == 0.0);
    CHECK(apply_kernel(Kernel(2, 6), e1).max_abs() == 0.0);
    CHECK_THROWS_AS(apply_kernel(id, PolyVector::one(3, 2)), DimensionError);
  }

  TEST_CASE("apply_kernel is linear") {
    Rng rng(113);
    const Kernel u(random_table(rng, 4, 6, Space::VC));
    const PolyVector phi = random_poly(rng, 2, 3, 3);
    const cplx lambda(0.3, -1.2);
    CHECK(max_abs_diff(apply_kernel(u, lambda * phi), lambda * apply_kernel(u, phi)) < 1e-13);
  }

  TEST_CASE("rank one kernels") {
    const DualTable one = embed(PolyVector::one(2, 4));
    const Kernel r1 = rank_one(one, one, 4);
    CHECK(r1.table()[0] == 1.0);
    CHECK(r1.table().max_abs() == 1.0);
    Rng rng(127);
    const DualTable psi = random_table(rng, 2, 4), phi = random_table(rng, 2, 4);
    const Kernel r = rank_one(psi, phi, 8);
    const PolyVector x = random_poly(rng, 2, 4, 4);
    const DualTable out = apply_kernel(r, x);
    CHECK(max_abs_diff(out, std::conj(phi(x)) * psi) < 1e-13);
    CHECK(max_abs_diff(adjoint_kernel(r), rank_one(phi, psi, 8)) < 1e-15);
  }

  TEST_CASE("evaluation matrices") {
    const Kernel id = identity_kernel(2, 6);
    const CMatrix e = matrix_of_kernel(id);
    const MonomialBasis& h = *id.index().half();
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
      for (Eigen::Index c = 0; c < e.cols(); ++c) {
        const bool inside = h.degree(static_cast<std::size_t>(r)) + h.degree(static_cast<std::size_t>(c)) <= 6;
        const double expected = r == c && inside ? h.factorial(static_cast<std::size_t>(r)) : 0.0;
        CHECK(e(r, c) == expected);
      }
    }
    Rng rng(131);
    const Kernel u(random_table(rng, 4, 6, Space::VC));
    CHECK(max_abs_diff(kernel_of_matrix(matrix_of_kernel(u), 2, 6), u) == 0.0);

    // the number operator's evaluation matrix <e^a|N e^b>
    const Eigen::VectorXd g = gram_diagonal(h);
    CMatrix number = CMatrix::Zero(e.rows(), e.cols());
    for (Eigen::Index r = 0; r < e.rows(); ++r) number(r, r) = h.degree(static_cast<std::size_t>(r)) * g(r);
    CHECK(max_abs_diff(kernel_of_matrix(number, 2, 6), number_kernel(2, 6)) < 1e-15);
  }

  TEST_CASE("identity kernel") {
    const Kernel id = identity_kernel(1, 6);
    CHECK(id.entry(0, 0) == 1.0);
    CHECK(id.entry(MultiIndex{2}, MultiIndex{2}) == 2.0);
    Rng rng(137);
    for (int s = 0; s < 10; ++s) {
      const Kernel id3 = identity_kernel(3, 16);
      const PolyVector psi = random_poly(rng, 3, 8, 8), phi = random_poly(rng, 3, 8, 8);
      const cplx expected = canonical_inner(psi, phi);
      CHECK(std::abs(pair_kernel(id3, psi, phi) - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }

  TEST_CASE("number kernel") {
    const Kernel n1 = number_kernel(1, 6);
    CHECK(n1.entry(0, 0) == 0.0);
    CHECK(n1.entry(MultiIndex{1}, MultiIndex{1}) == 1.0);
    const Kernel n2 = number_kernel(2, 8);
    const MonomialBasis& h = *n2.index().half();
    for (std::size_t a = 0; a < h.degree_begin(5); ++a) {
      const PolyVector ea = PolyVector::monomial(2, 8, h.exponents(a));
      const DualTable expected = embed(h.degree(a) * ea).restrict_to(8 - h.degree(a));
      CHECK(max_abs_diff(apply_kernel(n2, ea), expected) == 0.0);
    }
  }

  TEST_CASE("adjoint kernels") {
    const Kernel id = identity_kernel(2, 6);
    CHECK(max_abs_diff(adjoint_kernel(id), id) == 0.0);
    Rng rng(139);
    const Kernel u(random_table(rng, 4, 6, Space::VC));
    CHECK(max_abs_diff(adjoint_kernel(adjoint_kernel(u)), u) == 0.0);
    const HVector v = random_vector(rng, 2);
    const Kernel cv = compose_creator_left(v, id);
    const Kernel av = compose_annihilator_left(v, id);
    CHECK(max_abs_diff(adjoint_kernel(cv).table().restrict_to(5), av.table()) < 1e-14);
    // u*(psi+ phi-) = conj(u(phi+ psi-))
    const PolyVector psi = random_poly(rng, 2, 3, 3), phi = random_poly(rng, 2, 3, 3);
    CHECK(std::abs(pair_kernel(adjoint_kernel(u), psi, phi) - std::conj(pair_kernel(u, phi, psi))) < 1e-13);
  }

  TEST_CASE("creator kernel entries") {
    const Kernel ce1 = compose_creator_left(unit(2, 0), identity_kernel(2, 6));
    const MonomialBasis& h = *ce1.index().half();
    for (std::size_t a = 0; a < h.degree_begin(3); ++a) {
      MultiIndex up = h.multi_index(a);
      up[0] += 1;
      CHECK(ce1.entry(up, h.exponents(a)) == factorial(up));
    }
  }

  TEST_CASE("annihilator from the right of the identity is a(v)") {
    Rng rng(149);
    const HVector v = random_vector(rng, 2);
    const Kernel k = compose_annihilator_right(identity_kernel(2, 6), v);
    const Kernel id = identity_kernel(2, 6);
    const CMatrix expected = matrix_of_kernel(id) * annihilator_matrix(v, 6);
    CHECK(compare_matrix(k, matrix_of_kernel(k), top(expected, k)) < 1e-13);
  }

  TEST_CASE("composition rules against operator matrices") {
    Rng rng(151);
    for (int s = 0; s < 5; ++s) {
      const int d = 1 + s % 2;
      const int n = 6;
      const Kernel u(random_table(rng, 2 * d, n, Space::VC));
      const HVector v = random_vector(rng, d);
      const CMatrix e = matrix_of_kernel(u);
      const CMatrix cm = creator_matrix(v, n), am = annihilator_matrix(v, n);
      auto check_rule = [&](const Kernel& k, const CMatrix& expected) {
        CHECK(compare_matrix(k, matrix_of_kernel(k), top(expected, k)) < 1e-13);
      };
      check_rule(compose_creator_left(v, u), am.adjoint() * e);
      check_rule(compose_annihilator_left(v, u), cm.adjoint() * e);
      check_rule(compose_creator_right(u, v), e * cm);
      check_rule(compose_annihilator_right(u, v), e * am);
    }
  }

  TEST_CASE("antikernels") {
    AntiKernel single(2, 4);
    single.table()[0] = 1.0;
    Rng rng(157);
    const PolyVector phi = random_poly(rng, 2, 4, 2);
    CHECK(max_abs_diff(apply_antikernel(single, phi), std::conj(phi[0]) * embed(PolyVector::one(2, 2))) == 0.0);

    const AntiKernel u(random_table(rng, 4, 6, Space::VV));
    CHECK(max_abs_diff(apply_antikernel(u, I * phi), -I * apply_antikernel(u, phi)) < 1e-13);
    // U phi = E conj(phi) on the top block
    const CMatrix e = matrix_of_antikernel(u);
    const DualTable out = apply_antikernel(u, phi);
    const Eigen::VectorXcd direct = e.leftCols(phi.data().size()) * phi.data().conjugate();
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(std::abs(out[i] - direct(static_cast<Eigen::Index>(i))) < 1e-13);
  }

  TEST_CASE("antilinear composition rules against operator matrices") {
    Rng rng(163);
    for (int s = 0; s < 5; ++s) {
      const int d = 1 + s % 2;
      const int n = 6;
      const AntiKernel u(random_table(rng, 2 * d, n, Space::VV));
      const HVector v = random_vector(rng, d);
      const CMatrix e = matrix_of_antikernel(u);  // E(beta, alpha) = u[(alpha, beta)]
      const CMatrix cm = creator_matrix(v, n), am = annihilator_matrix(v, n);
      auto check_rule = [&](const AntiKernel& k, const CMatrix& expected) {
        CHECK(compare_matrix(k, matrix_of_antikernel(k), top(expected, k)) < 1e-13);
      };
      check_rule(anti_compose_creator_right(u, v), e * cm.conjugate());
      check_rule(anti_compose_creator_left(v, u), am.adjoint() * e);
      check_rule(anti_compose_annihilator_right(u, v), e * am.conjugate());
      check_rule(anti_compose_annihilator_left(v, u), cm.adjoint() * e);
    }
  }
}
