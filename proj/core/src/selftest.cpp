#include "bosonic/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <tuple>
#include <utility>

#include "bosonic/complexify.hpp"
#include "bosonic/errors.hpp"
#include "bosonic/gaussian.hpp"
#include "bosonic/kernelcalc.hpp"
#include "bosonic/metaplectic.hpp"
#include "bosonic/random.hpp"
#include "bosonic/symalg.hpp"

namespace bosonic {

namespace {

constexpr int kSamples = 5;

class Suite {
 public:
  explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

  // Records max residual of `body` against tol; exceptions count as failure.
  void check(const std::string& name, double tol, const std::function<double()>& body) {
    check_bounded(name, [&] { return std::pair{body(), tol}; });
  }

  // body returns {residual, tolerance} for checks whose tolerance is a
  // computed truncation tail.
  void check_bounded(const std::string& name, const std::function<std::pair<double, double>()>& body) {
    CheckResult r{name, std::numeric_limits<double>::infinity(), 0.0, false};
    try {
      std::tie(r.residual, r.tolerance) = body();
      r.passed = std::isfinite(r.residual) && r.residual <= r.tolerance;
    } catch (const std::exception&) {
      r.residual = std::numeric_limits<double>::infinity();
    }
    out_.push_back(r);
  }

 private:
  std::vector<CheckResult>& out_;
};

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::vector<CheckResult> run_selftest(const SelftestOptions& o) {
  if (o.dim < 1 || o.dim > 3) throw DimensionError("selftest: dimension must be in [1, 3]");
  if (o.truncation < 4 || o.truncation > 12) {
    throw TruncationError("selftest: truncation must be in [4, 12]");
  }
  std::vector<CheckResult> out;
  Suite suite(out);
  Rng rng(o.seed);
  const int d = o.dim;
  const int n = o.truncation;
  const int nk = 2 * n;
  const double tol = o.tolerance;

  suite.check("inner_omega_relation", 1e-14, [&] {
    double worst = 0.0;
    const cplx i(0.0, 1.0);
    for (int s = 0; s < kSamples; ++s) {
      const HVector x = random_vector(rng, d), y = random_vector(rng, d);
      const cplx rhs = omega(x, i * y) + i * omega(x, y);
      worst = std::max(worst, std::abs(inner(x, y) - rhs));
    }
    return worst;
  });

  suite.check("compose_apply_consistency", 1e-12, [&] {
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const RealLinearMap a = random_symplectic(rng, d), b = random_symplectic(rng, d);
      const HVector v = random_vector(rng, d);
      worst = std::max(worst, (compose(a, b).apply(v) - a.apply(b.apply(v))).cwiseAbs().maxCoeff());
      worst = std::max(worst, (compose(a, invert(a)).apply(v) - v).cwiseAbs().maxCoeff());
    }
    return worst;
  });

  const RealLinearMap g = random_symplectic(rng, d, 0.3);
  const SymplecticPack p = pack(g);
  suite.check("z_symmetry", tol, [&] {
    CMatrix m = metaplectic_Z(p).matrix();
    if (o.force_failure) m(0, d) += 1e-3;
    return std::max({p.z_g.symmetry_residual(), p.z_ginv.symmetry_residual(), SymAntilinear(m).symmetry_residual()});
  });
  suite.check("z_g_identities", tol, [&] {
    const ZIdentityResiduals r = z_identity_residuals(g, MapKind::symplectic);
    return std::max({r.inverse_identity, r.commutation, r.norm < 1.0 ? 0.0 : 1.0});
  });

  suite.check("creator_annihilator_adjointness", 1e-12, [&] {
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const HVector v = random_vector(rng, d);
      const PolyVector psi = random_poly(rng, d, n, n), phi = random_poly(rng, d, n, n - 1);
      worst = std::max(worst, std::abs(canonical_inner(psi, creator(v, phi)) -
                                       canonical_inner(annihilator(v, psi), phi)));
    }
    return worst;
  });

  suite.check("ccr", 1e-12, [&] {
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const HVector x = random_vector(rng, d), y = random_vector(rng, d);
      const PolyVector psi = random_poly(rng, d, n, n - 1);
      const PolyVector mixed = annihilator(x, creator(y, psi)) - creator(y, annihilator(x, psi));
      worst = std::max(worst, (mixed - inner(x, y) * psi).data().cwiseAbs().maxCoeff());
      const PolyVector low = random_poly(rng, d, n, n - 2);
      worst = std::max(worst, (creator(x, creator(y, low)) - creator(y, creator(x, low))).data().cwiseAbs().maxCoeff());
      worst = std::max(worst, (annihilator(x, annihilator(y, psi)) - annihilator(y, annihilator(x, psi))).data().cwiseAbs().maxCoeff());
    }
    return worst;
  });

  suite.check("heisenberg_ccr", 1e-12, [&] {
    double worst = 0.0;
    const auto limit = static_cast<Eigen::Index>(MonomialBasis::count_upto(d, n - 2));
    for (int s = 0; s < kSamples; ++s) {
      const HVector x = random_vector(rng, d), y = random_vector(rng, d);
      const CMatrix px = field_operator(x, n), py = field_operator(y, n);
      CMatrix comm = px * py - py * px;
      comm -= cplx(0.0, omega(x, y)) * CMatrix::Identity(comm.rows(), comm.cols());
      worst = std::max(worst, comm.leftCols(limit).cwiseAbs().maxCoeff());
    }
    return worst;
  });

  suite.check("permanent_inner_product", 1e-10, [&] {
    double worst = 0.0;
    const int len = std::min(n, 5);
    std::vector<HVector> xs, ys;
    for (int j = 0; j < len; ++j) {
      xs.push_back(random_vector(rng, d));
      ys.push_back(random_vector(rng, d));
    }
    const cplx a = canonical_inner(product_of_vectors(xs), product_of_vectors(ys));
    const cplx b = inner_permanent_oracle(xs, ys);
    worst = std::abs(a - b) / std::max(1.0, std::abs(b));
    return worst;
  });

  suite.check("functional_product_algebra", 1e-12, [&] {
    const DualTable a = random_table(rng, d, n), b = random_table(rng, d, n), c = random_table(rng, d, n);
    const double comm = max_abs_diff(functional_product(a, b), functional_product(b, a));
    const DualTable l = functional_product(functional_product(a, b), c);
    const DualTable r = functional_product(a, functional_product(b, c));
    return std::max(comm, max_abs_diff(l, r) / std::max(1.0, l.max_abs()));
  });

  const SymAntilinear z = random_symmetric(rng, d, 0.4);
  suite.check("gaussian_annihilator_property", 1e-12, [&] {
    const DualTable gz = gaussian_table(z, n);
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const HVector v = random_vector(rng, d);
      DualTable linear = DualTable::zero(d, n);
      const HVector zv = z.apply(v);
      for (int k = 0; k < d; ++k) linear[1 + static_cast<std::size_t>(k)] = zv(k);
      const DualTable lhs = dual_annihilator(v, gz);
      const DualTable rhs = functional_product(linear, gz);
      worst = std::max(worst, max_abs_diff(lhs, rhs) / std::max(1.0, rhs.max_abs(n - 1)));
    }
    return worst;
  });

  suite.check("gaussian_norm_closed_form", 1e-6, [&] {
    const int trunc = 16;
    const double series = table_norm_sq(gaussian_table(z, trunc));
    const double closed = gaussian_norm_sq_closed(z);
    const double tail = gaussian_tail_bound(z, trunc);
    const double diff = closed - series;
    return diff < -1e-12 || diff > tail + 1e-12 ? std::abs(diff) + 1.0 : std::abs(diff);
  });

  suite.check("hs_quadratic_norm", 1e-12, [&] {
    return std::abs(hs_norm(z) - std::sqrt(2.0) * quadratic_norm(quadratic_of(z)));
  });

  const Kernel id = identity_kernel(d, nk);
  suite.check("identity_kernel_pairing", tol, [&] {
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const PolyVector psi = random_poly(rng, d, n, n), phi = random_poly(rng, d, n, n);
      const cplx lhs = canonical_inner(psi, phi);
      worst = std::max(worst, std::abs(pair_kernel(id, psi, phi) - lhs) / std::max(1.0, std::abs(lhs)));
    }
    return worst;
  });

  suite.check("number_kernel_diagonal", 1e-12, [&] {
    const Kernel num = number_kernel(d, n);
    const MonomialBasis& h = *num.index().half();
    double worst = 0.0;
    const DualTable& t = num.table();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::size_t a = num.index().first(i), b = num.index().second(i);
      const double expected = a == b ? h.degree(a) * h.factorial(a) : 0.0;
      worst = std::max(worst, std::abs(t[i] - expected));
    }
    return worst;
  });

  suite.check("adjoint_kernel_pairing", 1e-12, [&] {
    const Kernel u(random_table(rng, 2 * d, n, Space::VC));
    const Kernel us = adjoint_kernel(u);
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const PolyVector psi = random_poly(rng, d, n, n / 2), phi = random_poly(rng, d, n, n / 2);
      worst = std::max(worst, std::abs(pair_kernel(us, psi, phi) - std::conj(pair_kernel(u, phi, psi))));
    }
    return worst;
  });

  suite.check("creator_annihilator_kernel_rules", 1e-12, [&] {
    const Kernel u(random_table(rng, 2 * d, n, Space::VC));
    const HVector v = random_vector(rng, d);
    const CMatrix e = matrix_of_kernel(u);
    const CMatrix cm = creator_matrix(v, n), am = annihilator_matrix(v, n);
    const MonomialBasis& h = *u.index().half();
    auto compare = [&](const Kernel& k, const CMatrix& expected) {
      const CMatrix got = matrix_of_kernel(Kernel(k.table().restrict_to(n - 1)));
      double w = 0.0;
      for (Eigen::Index r = 0; r < got.rows(); ++r) {
        for (Eigen::Index c = 0; c < got.cols(); ++c) {
          if (h.degree(static_cast<std::size_t>(r)) + h.degree(static_cast<std::size_t>(c)) > n - 1) continue;
          w = std::max(w, std::abs(got(r, c) - expected(r, c)));
        }
      }
      return w;
    };
    auto top = [&](const CMatrix& m) {
      const auto k = static_cast<Eigen::Index>(MonomialBasis::count_upto(d, n - 1));
      return CMatrix(m.topLeftCorner(k, k));
    };
    return std::max({compare(compose_creator_left(v, u), top(am.adjoint() * e)),
                     compare(compose_annihilator_left(v, u), top(cm.adjoint() * e)),
                     compare(compose_creator_right(u, v), top(e * cm)),
                     compare(compose_annihilator_right(u, v), top(e * am))});
  });

  const Kernel ug = metaplectic_kernel(p, nk);
  suite.check("metaplectic_intertwining", 1e-9, [&] { return intertwine_residual(p, ug); });
  suite.check("metaplectic_vacuum", tol, [&] {
    const DualTable vac = apply_kernel(ug, PolyVector::one(d, n));
    return max_abs_diff(vac, gaussian_table(p.z_ginv, vac.truncation()));
  });
  suite.check("metaplectic_adjoint", tol, [&] {
    const Kernel uinv = metaplectic_kernel(pack(p.g_inv), nk);
    return normalized_max_abs_diff(adjoint_kernel(ug), uinv);
  });
  suite.check("metaplectic_uniqueness", 0.0, [&] {
    const UniquenessReport r = uniqueness_report(p, std::min(nk, d == 1 ? 8 : 4));
    return static_cast<double>(std::abs(r.null_dimension - 1));
  });
  suite.check_bounded("shale_scaled_isometry", [&] {
    const GramReport r = scaled_isometry(p, ug, std::min(2, n / 2));
    return std::pair{std::max(r.scaled_deviation, r.proportional_deviation), std::max(1e-12, r.tail_estimate)};
  });
  suite.check("coherent_kernel_formula", 1e-8, [&] {
    double worst = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      const HVector x = random_vector_with_norm(rng, d, 0.8), y = random_vector_with_norm(rng, d, 0.8);
      const cplx closed = coherent_element_closed(p, x, y);
      const cplx trunc = coherent_element_truncated(ug, x, y);
      const double bound = coherent_tail_bound(p, x, y, n);
      worst = std::max(worst, std::max(0.0, std::abs(closed - trunc) - bound));
    }
    return worst;
  });

  const SymplecticPack ap = pack(random_antisymplectic(rng, d, 0.3), MapKind::antisymplectic);
  const AntiKernel ua = anti_kernel(ap, nk);
  suite.check("antisymplectic_intertwining", 1e-9, [&] { return anti_intertwine_residual(ap, ua); });
  suite.check_bounded("antisymplectic_antiunitarity", [&] {
    const GramReport r = antiunitarity_report(ap, ua, std::min(2, n / 2));
    return std::pair{r.scaled_deviation, std::max(1e-12, r.tail_estimate)};
  });

  return out;
}

}  // namespace bosonic
