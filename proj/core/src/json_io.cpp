#include "fano/json_io.hpp"

#include <cctype>
#include <sstream>

namespace fano::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::size_t universe_index(std::span<const Var> universe, Var v) {
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (universe[i] == v) return i;
  bad("variable " + std::string(v.name()) + " is outside the expected variables");
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("rational must be a \"p/q\" string or an integer");
  return Rational::parse(j.get<std::string>());
}

Json polynomial_to_json(const Polynomial& p, std::span<const Var> universe) {
  Json out = Json::object();
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> exps(universe.size(), 0);
    for (const auto& [v, e] : m.factors()) exps[universe_index(universe, v)] = e;
    std::string key;
    for (std::size_t i = 0; i < exps.size(); ++i) key += (i ? " " : "") + std::to_string(exps[i]);
    out[key] = to_json(c);
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j, std::span<const Var> universe) {
  if (j.is_string()) {
    Polynomial p = parse_polynomial(j.get<std::string>());
    for (Var v : p.variables()) universe_index(universe, v);
    return p;
  }
  if (!j.is_object()) bad("polynomial must be an object of exponent vectors or an expression string");
  Polynomial p;
  for (const auto& [key, value] : j.items()) {
    std::istringstream in(key);
    std::vector<Monomial::Factor> factors;
    std::size_t count = 0;
    long e = 0;
    while (in >> e) {
      if (e < 0) bad("negative exponent in \"" + key + "\"");
      if (count >= universe.size()) bad("exponent vector \"" + key + "\" is too long");
      factors.emplace_back(universe[count++], static_cast<std::uint32_t>(e));
    }
    if (!in.eof() || count != universe.size())
      bad("exponent vector \"" + key + "\" needs " + std::to_string(universe.size()) + " integers");
    p.add_term(Monomial::from_factors(factors), rational_from_json(value));
  }
  return p;
}

Json chart_form_to_json(const ChartForm& w) {
  const auto coords = w.context()->coordinates();
  Json terms = Json::array();
  for (const auto& [mask, c] : w.coefficients()) {
    Json term;
    term["variables"] = mask_names(*w.context(), mask);
    term["coefficient"] = polynomial_to_json(c, coords);
    terms.push_back(term);
  }
  Json out;
  out["degree"] = w.degree();
  out["denominator_exponent"] = w.denominator_exponent();
  out["terms"] = terms;
  return out;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

template <class Coeffs>
Coeffs skew_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j["a"].is_object()) bad("expected {\"a\": {\"ij\": \"p/q\", ...}}");
  Coeffs a;
  for (const auto& [key, value] : j["a"].items()) {
    if (key.size() != 2 || !std::isdigit(static_cast<unsigned char>(key[0])) ||
        !std::isdigit(static_cast<unsigned char>(key[1])))
      bad("coefficient key \"" + key + "\" must be two digits");
    const int i = key[0] - '0';
    const int k = key[1] - '0';
    if (i == k || !Coeffs::contains(i) || !Coeffs::contains(k)) bad("coefficient key \"" + key + "\" is not a valid pair");
    a.set(i, k, rational_from_json(value));
  }
  return a;
}

template <class Coeffs>
Json skew_to_json(const Coeffs& a) {
  Json inner = Json::object();
  for (const auto& [i, k] : Coeffs::pairs()) {
    const Rational x = a(i, k);
    if (!x.is_zero()) inner[std::to_string(i) + std::to_string(k)] = to_json(x);
  }
  Json out;
  out["a"] = inner;
  return out;
}

template So5Coeffs skew_from_json<So5Coeffs>(const Json&);
template So7Coeffs skew_from_json<So7Coeffs>(const Json&);
template Json skew_to_json<So5Coeffs>(const So5Coeffs&);
template Json skew_to_json<So7Coeffs>(const So7Coeffs&);

quintic::ConicPoint conic_from_json(const Json& j) {
  if (!j.is_object()) bad("expected {\"a23\": ..., \"a28\": ..., \"a35\": ...}");
  for (const char* k : {"a23", "a28", "a35"})
    if (!j.contains(k)) bad(std::string("missing conic coordinate ") + k);
  return {rational_from_json(j["a23"]), rational_from_json(j["a28"]), rational_from_json(j["a35"])};
}

Json conic_to_json(const quintic::ConicPoint& c) {
  Json out;
  out["a23"] = to_json(c.a23);
  out["a28"] = to_json(c.a28);
  out["a35"] = to_json(c.a35);
  return out;
}

}  // namespace fano::io
