#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "bosonic/errors.hpp"
#include "bosonic/metaplectic.hpp"
#include "bosonic/monomial_basis.hpp"
#include "bosonic/selftest.hpp"

namespace bosonic::cli {

namespace {

struct Config {
  int dim = 0;
  int truncation = kDefaultTruncation;
  double tolerance = kDefaultTolerance;
};

template <typename T>
std::optional<T> input_value(const Json& input, const char* key) {
  if (!input.is_object() || !input.contains(key)) return std::nullopt;
  try {
    return input.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Config resolve(const Json& input, const Options& o, int map_dim) {
  Config cfg;
  cfg.dim = map_dim;
  const std::optional<int> dim = o.dim ? o.dim : input_value<int>(input, "dimension");
  if (dim && *dim != map_dim) throw InputError("dimension does not match the map matrices");
  cfg.truncation = o.trunc.value_or(input_value<int>(input, "truncation").value_or(kDefaultTruncation));
  cfg.tolerance = o.tol.value_or(input_value<double>(input, "tolerance").value_or(kDefaultTolerance));
  if (cfg.truncation < 1 || 2 * cfg.truncation > kMaxTableDegree) {
    throw InputError("truncation must be in [1, " + std::to_string(kMaxTableDegree / 2) + "]");
  }
  if (!(cfg.tolerance > 0.0)) throw InputError("tolerance must be positive");
  return cfg;
}

const char* kind_name(MapKind k) { return k == MapKind::symplectic ? "symplectic" : "antisymplectic"; }

Json header(const char* command, const Config& cfg, MapKind kind) {
  return Json{{"command", command},
              {"dimension", cfg.dim},
              {"kind", kind_name(kind)},
              {"tolerance", cfg.tolerance},
              {"truncation", cfg.truncation}};
}

// Shared front half of check/kernel/element. On success fills `p`.
Outcome check_map(const MapSpec& spec, const Config& cfg, std::optional<SymplecticPack>& p) {
  Outcome out{header("check", cfg, spec.kind), kSuccess};
  Json& r = out.report;
  const double sign = spec.kind == MapKind::symplectic ? 1.0 : -1.0;
  const double residual = omega_residual(spec.map, sign);
  r["omega_residual"] = residual;
  if (residual > cfg.tolerance) {
    r["passed"] = false;
    r["error"] = std::string("map is not ") + kind_name(spec.kind);
    out.exit_code = kVerificationFailure;
    return out;
  }
  try {
    p = pack(spec.map, spec.kind, cfg.tolerance);
  } catch (const NumericalError& e) {
    r["passed"] = false;
    r["error"] = e.what();
    out.exit_code = kVerificationFailure;
    return out;
  }
  const ZIdentityResiduals z = z_identity_residuals(spec.map, spec.kind);
  r["z_g"] = to_json(p->z_g.matrix());
  r["symmetry_residual"] = z.symmetry;
  r["spectral_norm"] = z.norm;
  r["identity_residuals"] = Json{{"inverse_identity", z.inverse_identity}, {"commutation", z.commutation}};
  const bool ok = z.symmetry <= cfg.tolerance && z.norm < 1.0 && z.inverse_identity <= cfg.tolerance &&
                  z.commutation <= cfg.tolerance;
  r["passed"] = ok;
  if (!ok) out.exit_code = kVerificationFailure;
  return out;
}

}  // namespace

Outcome cmd_check(const Json& input, const Options& options) {
  const MapSpec spec = map_from_json(input);
  const Config cfg = resolve(input, options, static_cast<int>(spec.map.dim()));
  std::optional<SymplecticPack> p;
  return check_map(spec, cfg, p);
}

Outcome cmd_kernel(const Json& input, const Options& options) {
  const MapSpec spec = map_from_json(input);
  const Config cfg = resolve(input, options, static_cast<int>(spec.map.dim()));
  std::optional<SymplecticPack> p;
  Outcome out = check_map(spec, cfg, p);
  out.report["command"] = "kernel";
  if (out.exit_code != kSuccess) return out;

  const int degree = 2 * cfg.truncation;
  Json& r = out.report;
  r["kernel_degree"] = degree;
  double residual = 0.0;
  if (spec.kind == MapKind::symplectic) {
    const Kernel u = metaplectic_kernel(*p, degree);
    residual = intertwine_residual(*p, u);
    r["shale_constant"] = shale_constant(*p);
    r["intertwine_residual"] = residual;
    r["entries"] = table_to_json(u);
  } else {
    const AntiKernel u = anti_kernel(*p, degree);
    residual = anti_intertwine_residual(*p, u);
    r["anti_shale_constant"] = anti_shale_constant(*p);
    r["intertwine_residual"] = residual;
    r["entries"] = table_to_json(u);
  }
  const bool ok = residual <= cfg.tolerance;
  r["passed"] = ok;
  if (!ok) out.exit_code = kVerificationFailure;
  return out;
}

Outcome cmd_element(const Json& input, const Options& options) {
  const MapSpec spec = map_from_json(input);
  if (spec.kind != MapKind::symplectic) throw InputError("element requires a symplectic map");
  const Config cfg = resolve(input, options, static_cast<int>(spec.map.dim()));
  if (!input.contains("x") || !input.contains("y")) throw InputError("element needs vectors \"x\" and \"y\"");
  const HVector x = vector_from_json(input.at("x"));
  const HVector y = vector_from_json(input.at("y"));
  if (x.size() != cfg.dim || y.size() != cfg.dim) throw InputError("\"x\" and \"y\" must have the map dimension");

  std::optional<SymplecticPack> p;
  Outcome out = check_map(spec, cfg, p);
  out.report["command"] = "element";
  if (out.exit_code != kSuccess) return out;

  const int degree = 2 * cfg.truncation;
  const Kernel u = metaplectic_kernel(*p, degree);
  const cplx closed = coherent_element_closed(*p, x, y);
  const cplx truncated = coherent_element_truncated(u, x, y);
  const double diff = std::abs(closed - truncated);
  const double bound = coherent_tail_bound(*p, x, y, cfg.truncation);
  Json& r = out.report;
  r["kernel_degree"] = degree;
  r["closed_form"] = to_json(closed);
  r["truncated_pairing"] = to_json(truncated);
  r["difference"] = diff;
  r["tail_bound"] = bound;
  r["identity_tail_bound"] = coherent_identity_tail_bound(x, y, cfg.truncation);
  const bool ok = diff <= std::max(cfg.tolerance, bound);
  r["passed"] = ok;
  if (!ok) out.exit_code = kVerificationFailure;
  return out;
}

Outcome cmd_selftest(const Options& options) {
  SelftestOptions so;
  so.dim = options.dim.value_or(1);
  so.truncation = options.trunc.value_or(kDefaultTruncation);
  so.seed = options.seed;
  so.tolerance = options.tol.value_or(kDefaultTolerance);
  so.force_failure = options.force_failure;
  if (!(so.tolerance > 0.0)) throw InputError("tolerance must be positive");

  const std::vector<CheckResult> results = run_selftest(so);
  Outcome out;
  Json& r = out.report;
  r = Json{{"command", "selftest"},
           {"dimension", so.dim},
           {"tolerance", so.tolerance},
           {"truncation", so.truncation},
           {"kernel_degree", 2 * so.truncation},
           {"seed", so.seed},
           {"force_failure", so.force_failure}};
  Json checks = Json::array();
  Json failed = Json::array();
  for (const CheckResult& c : results) {
    checks.push_back(Json{{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    if (!c.passed) failed.push_back(c.name);
  }
  r["checks"] = checks;
  r["failed"] = failed;
  const bool ok = failed.empty();
  r["passed"] = ok;
  out.exit_code = ok ? kSuccess : kVerificationFailure;
  return out;
}

}  // namespace bosonic::cli
