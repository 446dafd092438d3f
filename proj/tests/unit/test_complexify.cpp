#include <doctest.h>

#include <vector>

#include "bosonic/complexify.hpp"
#include "bosonic/gaussian.hpp"
#include "bosonic/random.hpp"
#include "helpers.hpp"

using namespace bosonic;
using testing::I;
using testing::max_abs;
using testing::unit;

TEST_SUITE("complexify") {
  TEST_CASE("plus and minus") {
    CHECK(max_abs(plus(unit(2, 0)) - unit(4, 0)) == 0.0);
    Rng rng(61);
    for (int s = 0; s < 10; ++s) {
      const HVector x = random_vector(rng, 3), y = random_vector(rng, 3);
      CHECK(std::abs(inner(minus(x), minus(y)) - std::conj(inner(x, y))) < 1e-14);
      CHECK(std::abs(inner(plus(x), minus(y))) == 0.0);
      CHECK(max_abs(conj_vc(plus(x)) - minus(x)) == 0.0);
      CHECK(max_abs(conj_vc(conj_vc(plus(x) + minus(y))) - (plus(x) + minus(y))) == 0.0);
    }
  }

  TEST_CASE("plus_poly and minus_poly") {
    CHECK(max_abs_diff(plus_poly(PolyVector::one(2, 3)), PolyVector::one(4, 3)) == 0.0);
    const PolyVector m = minus_poly(PolyVector::monomial(1, 2, MultiIndex{1}, I));
    CHECK(max_abs_diff(m, PolyVector::monomial(2, 2, MultiIndex{0, 1}, -I)) == 0.0);
    Rng rng(67);
    for (int s = 0; s < 10; ++s) {
      const PolyVector psi = random_poly(rng, 2, 4, 4), phi = random_poly(rng, 2, 4, 4);
      CHECK(std::abs(canonical_inner(minus_poly(psi), minus_poly(phi)) - canonical_inner(phi, psi)) < 1e-12);
      CHECK(std::abs(canonical_inner(plus_poly(psi), plus_poly(phi)) - canonical_inner(psi, phi)) < 1e-12);
    }
  }

  TEST_CASE("star involution") {
    Rng rng(71);
    const DualTable u = random_table(rng, 4, 5, Space::VC);
    CHECK(max_abs_diff(star_table(star_table(u)), u) == 0.0);
    const PolyVector theta = random_poly(rng, 4, 5, 5);
    CHECK(max_abs_diff(conj_star(conj_star(theta)), theta) == 0.0);

    DualTable single = DualTable::zero(4, 3, Space::VC);
    single.set(MultiIndex{0, 1, 2, 0}, 2.0 + I);  // (alpha0, beta0) = ((0,1), (2,0))
    const DualTable st = star_table(single);
    CHECK(st.at(MultiIndex{2, 0, 0, 1}) == 2.0 - I);
    CHECK(st.at(MultiIndex{0, 1, 2, 0}) == 0.0);

    const DualTable pref = gaussian_table(preferred_quadratic(2), 6, Space::VC);
    CHECK(max_abs_diff(star_table(pref), pref) == 0.0);
  }

  TEST_CASE("preferred quadratic") {
    const SymAntilinear z = preferred_quadratic(3);
    CHECK(z.symmetry_residual() == 0.0);
    Rng rng(73);
    for (int s = 0; s < 10; ++s) {
      const HVector v = random_vector(rng, 3);
      CHECK(max_abs(z.apply(plus(v)) - minus(v)) == 0.0);
      const HVector x = random_vector(rng, 3), y = random_vector(rng, 3);
      const std::vector<HVector> factors{plus(x), minus(y)};
      const Quadratic zeta = quadratic_of(z, 2, Space::VC);
      CHECK(std::abs(zeta.table()(product_of_vectors(factors)) - inner(x, y)) < 1e-14);
    }
  }

  TEST_CASE("injections into the doubled space") {
    CHECK(max_abs_diff(inject1(PolyVector::one(2, 2)), PolyVector::one(4, 2)) == 0.0);
    const PolyVector e1 = PolyVector::monomial(2, 2, MultiIndex{1, 0});
    const PolyVector prod = poly_product(inject1(e1), inject2(e1));
    CHECK(max_abs_diff(prod, PolyVector::monomial(4, 2, MultiIndex{1, 0, 1, 0})) == 0.0);
    Rng rng(79);
    const HVector x = random_vector(rng, 2), y = random_vector(rng, 2);
    const PolyVector px = creator(x, PolyVector::one(2, 1));
    const PolyVector py = creator(y, PolyVector::one(2, 1));
    CHECK(std::abs(canonical_inner(inject1(px), inject2(py))) == 0.0);
  }

  TEST_CASE("doubled index bookkeeping") {
    const DoubledIndex ix(2, 4);
    const MonomialBasis& h = *ix.half();
    const MonomialBasis& full = *ix.doubled();
    for (std::size_t i = 0; i < full.size(); ++i) {
      const auto a = h.exponents(ix.first(i)), b = h.exponents(ix.second(i));
      const auto e = full.exponents(i);
      CHECK(e[0] == a[0]);
      CHECK(e[1] == a[1]);
      CHECK(e[2] == b[0]);
      CHECK(e[3] == b[1]);
      CHECK(ix.join(ix.first(i), ix.second(i)) == i);
    }
    CHECK(ix.join(h.index(MultiIndex{3, 0}), h.index(MultiIndex{0, 2})) == npos);
    CHECK(DoubledIndex::key(MultiIndex{1, 0}, MultiIndex{2, 3}) == "1,0;2,3");
  }

  TEST_CASE("block product") {
    Rng rng(83);
    const PolyVector p = random_poly(rng, 2, 3, 3), q = random_poly(rng, 2, 3, 3);
    const PolyVector direct = poly_product(inject1(p).retruncate(6), inject2(q).retruncate(6));
    CHECK(max_abs_diff(block_product(p, q, 6), direct) < 1e-14);
  }
}
