#include <doctest.h>

#include "fano/json_io.hpp"
#include "fano/quintic.hpp"
#include "fano/sampling.hpp"

using namespace fano;
using fano::io::Json;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_SUITE("json encoding") {
  TEST_CASE("rationals") {
    CHECK(io::to_json(Rational(-2, 3)) == Json("-2/3"));
    CHECK(io::to_json(Rational(5)) == Json("5"));
    CHECK(io::rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(io::rational_from_json(Json(-7)) == Rational(-7));
    CHECK(code_of([] { io::rational_from_json(Json(1.5)); }) == ErrorCode::InvalidInput);
    CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), Error);
    CHECK_THROWS_AS(io::rational_from_json(Json("abc")), Error);
  }

  TEST_CASE("polynomials over a universe") {
    const auto z = homogeneous_range(5);
    const Polynomial f = P("Z_0^3 - 2/3*Z_1*Z_2*Z_4 + Z_3^3");
    const Json j = io::polynomial_to_json(f, z);
    CHECK(j["3 0 0 0 0"] == "1");
    CHECK(j["0 1 1 0 1"] == "-2/3");
    CHECK(j.begin().key() == "3 0 0 0 0");
    CHECK(io::polynomial_from_json(j, z) == f);
    CHECK(io::polynomial_from_json(Json("Z_0^3 + Z_1^3"), z) == P("Z_0^3+Z_1^3"));
    CHECK(code_of([&] { io::polynomial_to_json(P("Z_7"), z); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { io::polynomial_from_json(Json("Z_7^3"), z); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { io::polynomial_from_json(Json::parse(R"({"1 0": "1"})"), z); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { io::polynomial_from_json(Json::parse(R"({"1 0 0 0 -1": "1"})"), z); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { io::polynomial_from_json(Json(3), z); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { io::polynomial_from_json(Json("Z_0^^3"), z); }) == ErrorCode::ParseError);
  }

  TEST_CASE("random polynomial round trip") {
    const auto z = homogeneous_range(10);
    Sampler s(7);
    for (int t = 0; t < 50; ++t) {
      const Polynomial p = s.polynomial(z, 4, 8);
      CHECK(io::polynomial_from_json(Json::parse(io::polynomial_to_json(p, z).dump()), z) == p);
    }
  }

  TEST_CASE("skew coefficients") {
    const Json j = Json::parse(R"({"a": {"01": "1", "32": "-2/3", "58": 4}})");
    const auto a = io::skew_from_json<So7Coeffs>(j);
    CHECK(a(0, 1) == Rational(1));
    CHECK(a(2, 3) == Rational(2, 3));
    CHECK(a(5, 8) == Rational(4));
    CHECK(io::skew_from_json<So7Coeffs>(io::skew_to_json(a)) == a);
    CHECK(io::skew_to_json(a)["a"].size() == 3);
    CHECK(code_of([] { io::skew_from_json<So5Coeffs>(Json::parse(R"({"a": {"05": "1"}})")); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { io::skew_from_json<So7Coeffs>(Json::parse(R"({"a": {"11": "1"}})")); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { io::skew_from_json<So7Coeffs>(Json::parse(R"({"a": {"016": "1"}})")); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { io::skew_from_json<So7Coeffs>(Json::parse(R"({"b": {}})")); }) == ErrorCode::InvalidInput);
    Sampler s(8);
    for (int t = 0; t < 20; ++t) {
      const So5Coeffs b = s.so5();
      CHECK(io::skew_from_json<So5Coeffs>(io::skew_to_json(b)) == b);
    }
  }

  TEST_CASE("conic points") {
    const quintic::ConicPoint c{4, 2, 9};
    const auto back = io::conic_from_json(io::conic_to_json(c));
    CHECK(back.a23 == c.a23);
    CHECK(back.a28 == c.a28);
    CHECK(back.a35 == c.a35);
    CHECK(code_of([] { io::conic_from_json(Json::parse(R"({"a23": 1, "a28": 1})")); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("chart forms, vectors and matrices") {
    const ChartForm w = quintic::restrict(epsilon(1, 3));
    const Json j = io::chart_form_to_json(w);
    CHECK(j["degree"] == 1);
    CHECK(j["denominator_exponent"] == 0);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["variables"] == Json::array({"x_1"}));
    CHECK(j["terms"][0]["coefficient"]["0 1 0"] == "1");
    CHECK(j["terms"][1]["coefficient"]["1 0 0"] == "-1");
    RationalMatrix m(2, 2);
    m(0, 1) = Rational(1, 2);
    m(1, 0) = -3;
    CHECK(io::matrix_to_json(m).dump() == R"([["0","1/2"],["-3","0"]])");
    CHECK(io::vector_to_json({Rational(1), Rational(-1, 4)}).dump() == R"(["1","-1/4"])");
  }
}

TEST_SUITE("sampling") {
  TEST_CASE("same seed, same stream") {
    Sampler a(123), b(123), c(124);
    bool differs = false;
    for (int t = 0; t < 30; ++t) {
      const Rational x = a.rational();
      CHECK(x == b.rational());
      differs = differs || x != c.rational();
    }
    CHECK(differs);
    CHECK(Sampler(5).so7() == Sampler(5).so7());
  }

  TEST_CASE("height bounds") {
    Sampler s(9);
    for (int t = 0; t < 500; ++t) {
      const Rational x = s.rational(12);
      CHECK(abs(x.numerator()) <= 12);
      CHECK(x.denominator() <= 12);
      CHECK_FALSE(s.nonzero_rational(3).is_zero());
      const long n = s.integer(-2, 2);
      CHECK(n >= -2);
      CHECK(n <= 2);
    }
  }

  TEST_CASE("structured samples") {
    Sampler s(10);
    for (int t = 0; t < 20; ++t) {
      const So5Coeffs d = s.decomposable_so5();
      CHECK_FALSE(d.is_zero());
      CHECK(d.alpha(0, 1, 2, 3).is_zero());
      CHECK(d.alpha(1, 2, 3, 4).is_zero());
      CHECK(s.cubic().has_independent_partials());
      const auto c = s.conic_point();
      CHECK(quintic::on_conic(c));
      CHECK_FALSE((c.a23.is_zero() && c.a28.is_zero() && c.a35.is_zero()));
    }
  }
}
