#include <doctest.h>

#include <cmath>
#include <vector>

#include "bosonic/errors.hpp"
#include "bosonic/random.hpp"
#include "bosonic/symalg.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bosonic;
using testing::I;
using testing::unit;
using testing::vec;

namespace {

PolyVector mono(int vars, int n, MultiIndex alpha, cplx c = 1.0) { return PolyVector::monomial(vars, n, alpha, c); }

double diff(const GradedTable& a, const GradedTable& b) { return max_abs_diff(a, b); }

}  // namespace

TEST_SUITE("symalg") {
  TEST_CASE("canonical inner examples") {
    CHECK(std::abs(canonical_inner(mono(2, 2, {2, 0}), mono(2, 2, {2, 0})) - 2.0) < 1e-15);
    CHECK(std::abs(canonical_inner(mono(2, 2, {1, 1}), mono(2, 2, {1, 1})) - 1.0) < 1e-15);
    CHECK(std::abs(canonical_inner(PolyVector::one(2, 2), PolyVector::one(2, 2)) - 1.0) < 1e-15);
  }

  TEST_CASE("permanent oracle examples") {
    const std::vector<HVector> x1{vec({1.0})}, y1{vec({I})};
    CHECK(std::abs(inner_permanent_oracle(x1, y1) - I) < 1e-15);
    const std::vector<HVector> e11{unit(2, 0), unit(2, 0)};
    CHECK(std::abs(inner_permanent_oracle(e11, e11) - 2.0) < 1e-15);
    const std::vector<HVector> e12{unit(2, 0), unit(2, 1)}, e21{unit(2, 1), unit(2, 0)};
    CHECK(std::abs(inner_permanent_oracle(e12, e21) - 1.0) < 1e-15);
  }

  TEST_CASE("canonical inner matches permutation sums and Ryser") {
    Rng rng(17);
    for (int n = 1; n <= 6; ++n) {
      for (int s = 0; s < 5; ++s) {
        std::vector<HVector> xs, ys;
        std::vector<Eigen::VectorXcd> xo, yo;
        for (int j = 0; j < n; ++j) {
          xs.push_back(random_vector(rng, 3));
          ys.push_back(random_vector(rng, 3));
          xo.push_back(xs.back());
          yo.push_back(ys.back());
        }
        const cplx lib = canonical_inner(product_of_vectors(xs), product_of_vectors(ys));
        const cplx perm = inner_permanent_oracle(xs, ys);
        const cplx ryser = oracle::gram_permanent(xo, yo);
        CHECK(std::abs(lib - perm) <= 1e-10 * std::max(1.0, std::abs(perm)));
        CHECK(std::abs(ryser - perm) <= 1e-10 * std::max(1.0, std::abs(perm)));
      }
    }
  }

  TEST_CASE("creator and annihilator examples") {
    CHECK(diff(creator(unit(2, 0), PolyVector::one(2, 3)), mono(2, 3, {1, 0})) == 0.0);
    CHECK(diff(annihilator(unit(2, 0), mono(2, 3, {2, 0})), mono(2, 3, {1, 0}, 2.0)) == 0.0);
    CHECK(diff(annihilator(I * unit(1, 0), mono(1, 3, {1})), mono(1, 3, {0}, -I)) == 0.0);
    CHECK_THROWS_AS(creator(unit(1, 0), mono(1, 3, {3})), TruncationError);
    CHECK(diff(creator(unit(1, 0), mono(1, 3, {3}), Overflow::drop), PolyVector::zero(1, 3)) == 0.0);
  }

  TEST_CASE("annihilator on products follows the Leibniz sum") {
    Rng rng(19);
    std::vector<HVector> xs;
    for (int j = 0; j < 4; ++j) xs.push_back(random_vector(rng, 2));
    const HVector v = random_vector(rng, 2);
    PolyVector expected = PolyVector::zero(2, 4);
    for (int j = 0; j < 4; ++j) {
      std::vector<HVector> rest;
      for (int k = 0; k < 4; ++k) {
        if (k != j) rest.push_back(xs[static_cast<std::size_t>(k)]);
      }
      expected += inner(v, xs[static_cast<std::size_t>(j)]) * product_of_vectors(rest, 4);
    }
    CHECK(diff(annihilator(v, product_of_vectors(xs)), expected) < 1e-13);
  }

  TEST_CASE("adjointness and canonical commutation relations") {
    Rng rng(23);
    for (int s = 0; s < 20; ++s) {
      const int d = 1 + s % 3;
      const HVector x = random_vector(rng, d), y = random_vector(rng, d);
      const PolyVector psi = random_poly(rng, d, 8, 8), phi = random_poly(rng, d, 8, 7);
      CHECK(std::abs(canonical_inner(psi, creator(x, phi)) - canonical_inner(annihilator(x, psi), phi)) < 1e-12);
      const PolyVector low = random_poly(rng, d, 8, 7);
      const PolyVector comm = annihilator(x, creator(y, low)) - creator(y, annihilator(x, low));
      CHECK(diff(comm, inner(x, y) * low) < 1e-12);
    }
  }

  TEST_CASE("poly_product") {
    const PolyVector p = mono(2, 4, {1, 0}) + mono(2, 4, {0, 1}, I);
    const PolyVector q = mono(2, 4, {1, 1}, 2.0);
    const PolyVector pq = poly_product(p, q);
    CHECK(diff(pq, mono(2, 4, {2, 1}, 2.0) + mono(2, 4, {1, 2}, 2.0 * I)) == 0.0);
    CHECK_THROWS_AS(poly_product(mono(1, 2, {2}), mono(1, 2, {1})), TruncationError);
    // product of vectors agrees with repeated creation
    Rng rng(29);
    const HVector a = random_vector(rng, 2), b = random_vector(rng, 2);
    const std::vector<HVector> ab{a, b};
    CHECK(diff(product_of_vectors(ab, 4), creator(a, creator(b, PolyVector::one(2, 4)))) < 1e-14);
  }

  TEST_CASE("dual operators") {
    const DualTable one = embed(PolyVector::one(2, 3));
    const DualTable e1 = embed(mono(2, 3, {1, 0}));
    CHECK(diff(dual_annihilator(unit(2, 0), e1), embed(PolyVector::one(2, 2))) == 0.0);
    CHECK(diff(dual_creator(unit(2, 0), one), e1) == 0.0);
    CHECK(diff(dual_annihilator(unit(2, 1), one), DualTable::zero(2, 2)) == 0.0);
    CHECK(dual_annihilator(unit(2, 1), one).truncation() == 2);
    CHECK_THROWS_AS(dual_annihilator(unit(1, 0), DualTable::zero(1, 0)), TruncationError);
  }

  TEST_CASE("dual operators are transposes of the vector operators") {
    Rng rng(31);
    for (int s = 0; s < 10; ++s) {
      const HVector v = random_vector(rng, 2);
      const DualTable phi = random_table(rng, 2, 6);
      const PolyVector psi = random_poly(rng, 2, 6, 5);
      CHECK(std::abs(dual_creator(v, phi)(psi) - phi(annihilator(v, psi))) < 1e-12);
      CHECK(std::abs(dual_annihilator(v, phi)(psi.retruncate(5)) - phi(creator(v, psi))) < 1e-12);
    }
  }

  TEST_CASE("embed") {
    CHECK(embed(PolyVector::one(2, 2))[0] == 1.0);
    const DualTable t = embed(mono(2, 2, {2, 0}));
    CHECK(t.at(MultiIndex{2, 0}) == 2.0);
    CHECK(embed(mono(2, 2, {1, 0}))[0] == 0.0);
    Rng rng(37);
    const PolyVector psi = random_poly(rng, 2, 5, 5), phi = random_poly(rng, 2, 5, 5);
    CHECK(std::abs(embed(phi)(psi) - canonical_inner(psi, phi)) < 1e-13);
  }

  TEST_CASE("functional product") {
    const DualTable one = embed(PolyVector::one(2, 3));
    CHECK(diff(functional_product(one, one), one) == 0.0);
    const DualTable e1 = embed(mono(2, 3, {1, 0}));
    const DualTable sq = functional_product(e1, e1);
    CHECK(sq.at(MultiIndex{2, 0}) == 2.0);
    Rng rng(41);
    for (int s = 0; s < 5; ++s) {
      const DualTable a = random_table(rng, 3, 5), b = random_table(rng, 3, 5), c = random_table(rng, 3, 5);
      CHECK(diff(functional_product(a, b), functional_product(b, a)) < 1e-13);
      CHECK(diff(functional_product(functional_product(a, b), c), functional_product(a, functional_product(b, c))) < 1e-12);
      CHECK(diff(functional_product(a, embed(PolyVector::one(3, 3))), a.restrict_to(3)) < 1e-15);
    }
  }

  TEST_CASE("annihilators act as derivations on the functional product") {
    Rng rng(43);
    const HVector v = random_vector(rng, 2);
    const DualTable a = random_table(rng, 2, 6), b = random_table(rng, 2, 6);
    const DualTable lhs = dual_annihilator(v, functional_product(a, b));
    const DualTable rhs = functional_product(dual_annihilator(v, a), b.restrict_to(5)) +
                          functional_product(a.restrict_to(5), dual_annihilator(v, b));
    CHECK(diff(lhs, rhs) < 1e-12);
  }

  TEST_CASE("number operator") {
    CHECK(diff(number_apply(PolyVector::one(2, 3)), PolyVector::zero(2, 3)) == 0.0);
    CHECK(diff(number_apply(mono(2, 3, {1, 1})), mono(2, 3, {1, 1}, 2.0)) == 0.0);
    CHECK(diff(number_apply(mono(1, 3, {3})), mono(1, 3, {3}, 3.0)) == 0.0);
    // N = sum_j c(e_j) a(e_j)
    Rng rng(47);
    const PolyVector psi = random_poly(rng, 3, 5, 5);
    PolyVector sum = PolyVector::zero(3, 5);
    for (int j = 0; j < 3; ++j) sum += creator(unit(3, j), annihilator(unit(3, j), psi));
    CHECK(diff(number_apply(psi), sum) < 1e-13);
  }

  TEST_CASE("coherent vectors") {
    CHECK(diff(coherent(HVector::Zero(2), 4), PolyVector::one(2, 4)) == 0.0);
    const PolyVector c = coherent(vec({1.0}), 20);
    CHECK(std::abs(canonical_inner(c, c) - std::exp(1.0)) < 1e-12);
    CHECK(std::abs(coherent(vec({1.0, 2.0}), 3).at(MultiIndex{1, 1}) - 2.0) < 1e-15);
    // a(v) e^x = <v|x> e^x below the top degree
    Rng rng(53);
    const HVector x = random_vector(rng, 2), v = random_vector(rng, 2);
    const PolyVector ex = coherent(x, 8);
    CHECK(diff(annihilator(v, ex).retruncate(7), inner(v, x) * ex.retruncate(7)) < 1e-13);
  }

  TEST_CASE("operator matrices") {
    Rng rng(59);
    const HVector v = random_vector(rng, 2);
    const PolyVector psi = random_poly(rng, 2, 5, 4);
    CHECK(testing::max_abs(creator_matrix(v, 5) * psi.data() - creator(v, psi).data()) < 1e-14);
    CHECK(testing::max_abs(annihilator_matrix(v, 5) * psi.data() - annihilator(v, psi).data()) < 1e-14);
    const Eigen::VectorXd g = gram_diagonal(MonomialBasis(2, 2));
    CHECK(g(3) == 2.0);
    CHECK(g(4) == 1.0);
  }
}
