#include <doctest.h>

#include <cmath>

#include "bosonic/errors.hpp"
#include "commands.hpp"
#include "json_io.hpp"

using namespace bosonic;
using namespace bosonic::cli;

namespace {

Json squeeze_map(double r) {
  return Json{{"C", Json::array({Json::array({Json{{"re", std::cosh(r)}, {"im", 0.0}}})})},
              {"A", Json::array({Json::array({Json{{"re", std::sinh(r)}, {"im", 0.0}}})})},
              {"kind", "symplectic"}};
}

cplx entry(const Json& report, const char* key) { return complex_from_json(report.at("entries").at(key)); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("complex and table serialization") {
    const Json j = to_json(cplx(1.5, -0.25));
    CHECK(j.at("re") == 1.5);
    CHECK(j.at("im") == -0.25);
    CHECK(complex_from_json(j) == cplx(1.5, -0.25));
    CHECK(complex_from_json(Json(2.0)) == cplx(2.0, 0.0));
    CHECK_THROWS_AS(complex_from_json(Json("x")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2]]")), InputError);
  }

  TEST_CASE("JSON round trip is bit exact") {
    Options o;
    o.trunc = 4;
    const Outcome out = cmd_kernel(squeeze_map(0.3), o);
    const std::string first = out.report.dump();
    const std::string second = parse_text(first).dump();
    CHECK(first == second);
    const double awkward = 0.1 + 0.2;
    const Json k = to_json(cplx(awkward, std::nextafter(1.0, 2.0)));
    const cplx back = complex_from_json(parse_text(k.dump()));
    CHECK(back.real() == awkward);
    CHECK(back.imag() == std::nextafter(1.0, 2.0));
  }

  TEST_CASE("check reports tolerance and truncation") {
    Options o;
    o.tol = 1e-9;
    const Outcome out = cmd_check(squeeze_map(0.3), o);
    CHECK(out.exit_code == kSuccess);
    CHECK(out.report.at("tolerance") == 1e-9);
    CHECK(out.report.at("truncation") == kDefaultTruncation);
    const cplx z = complex_from_json(out.report.at("z_g").at(0).at(0));
    CHECK(z.real() == doctest::Approx(std::tanh(0.3)).epsilon(1e-14));
    CHECK(out.report.at("passed") == true);
  }

  TEST_CASE("check flags a non-symplectic map") {
    Json m = squeeze_map(0.3);
    m["A"] = Json::array({Json::array({0.5})});
    const Outcome out = cmd_check(m, Options{});
    CHECK(out.exit_code == kVerificationFailure);
    CHECK(out.report.at("passed") == false);
  }

  TEST_CASE("kernel entries use doubled keys") {
    const double r = 0.3;
    Options o;
    o.trunc = 3;
    const Outcome out = cmd_kernel(squeeze_map(r), o);
    CHECK(out.exit_code == kSuccess);
    CHECK(out.report.at("kernel_degree") == 6);
    CHECK(entry(out.report, "0;0") == cplx(1.0, 0.0));
    CHECK(std::abs(entry(out.report, "2;0") + std::tanh(r)) < 1e-15);
    CHECK(std::abs(entry(out.report, "0;2") - std::tanh(r)) < 1e-15);
    CHECK(std::abs(entry(out.report, "1;1") - 1.0 / std::cosh(r)) < 1e-15);
    CHECK(out.report.at("shale_constant").get<double>() ==
          doctest::Approx(std::pow(std::cosh(r), -0.5)).epsilon(1e-14));
  }

  TEST_CASE("kernel keys list every mode") {
    const Json conj = Json{{"C", Json::array({Json::array({0.0, 0.0}), Json::array({0.0, 0.0})})},
                           {"A", Json::array({Json::array({1.0, 0.0}), Json::array({0.0, 1.0})})},
                           {"kind", "antisymplectic"}};
    Options o;
    o.trunc = 2;
    const Outcome out = cmd_kernel(conj, o);
    CHECK(out.exit_code == kSuccess);
    CHECK(entry(out.report, "1,1;1,1") == cplx(1.0, 0.0));
    CHECK(entry(out.report, "2,0;2,0") == cplx(2.0, 0.0));
    CHECK(entry(out.report, "1,0;0,1") == cplx(0.0, 0.0));
  }

  TEST_CASE("element against the closed form") {
    Json in = squeeze_map(0.3);
    in["x"] = Json::array({1.0});
    in["y"] = Json::array({1.0});
    Options o;
    o.trunc = 10;
    const Outcome out = cmd_element(in, o);
    CHECK(out.exit_code == kSuccess);
    const cplx closed = complex_from_json(out.report.at("closed_form"));
    CHECK(std::abs(closed - std::exp(1.0 / std::cosh(0.3))) < 1e-14);
    CHECK(out.report.at("difference").get<double>() <= out.report.at("tail_bound").get<double>());
  }

  TEST_CASE("input errors") {
    Options o;
    o.dim = 2;
    CHECK_THROWS_AS(cmd_check(squeeze_map(0.3), o), InputError);
    Json bad = squeeze_map(0.3);
    bad["kind"] = "orthogonal";
    CHECK_THROWS_AS(cmd_check(bad, Options{}), InputError);
    Json no_c = squeeze_map(0.3);
    no_c.erase("C");
    CHECK_THROWS_AS(cmd_kernel(no_c, Options{}), InputError);
    CHECK_THROWS_AS(cmd_element(squeeze_map(0.3), Options{}), InputError);
    CHECK_THROWS_AS(parse_text("{\"C\": [["), InputError);
    Options neg;
    neg.tol = -1.0;
    CHECK_THROWS_AS(cmd_selftest(neg), InputError);
  }

  TEST_CASE("selftest command") {
    Options o;
    o.trunc = 4;
    CHECK(cmd_selftest(o).exit_code == kSuccess);
    o.force_failure = true;
    const Outcome out = cmd_selftest(o);
    CHECK(out.exit_code == kVerificationFailure);
    CHECK(out.report.at("failed") == Json::array({"z_symmetry"}));
  }
}
