#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fano/cubic.hpp"
#include "fano/quintic.hpp"
#include "fano/sampling.hpp"

namespace fano::cli {

namespace {

using io::Json;

struct Inputs {
  std::string digest_source;
  std::optional<Json> input;
  std::optional<Json> cubic;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Inputs load(const Options& opts) {
  Inputs in;
  if (!opts.cubic.empty()) {
    const std::string text = read_file(opts.cubic);
    in.digest_source += text;
    in.cubic = parse_json(text, opts.cubic);
  }
  if (!opts.input.empty()) {
    const std::string text = read_file(opts.input);
    in.digest_source += text;
    in.input = parse_json(text, opts.input);
  }
  return in;
}

Json header(const std::string& command, const Inputs& in) {
  Json j;
  j["command"] = command;
  j["input_digest"] = fnv1a_hex(in.digest_source);
  return j;
}

const std::vector<Var>& z04() {
  static const std::vector<Var> z = homogeneous_range(5);
  return z;
}

cubic::CubicForm load_cubic(const Inputs& in, Json& report) {
  const Json* source = nullptr;
  if (in.cubic) {
    source = &*in.cubic;
  } else if (in.input && in.input->contains("F")) {
    source = &*in.input;
  }
  if (!source) {
    report["cubic"] = "fermat";
    return cubic::CubicForm::fermat();
  }
  if (!source->is_object() || !source->contains("F"))
    throw Error(ErrorCode::InvalidInput, "cubic input must be {\"F\": polynomial}");
  cubic::CubicForm f(io::polynomial_from_json((*source)["F"], z04()));
  report["cubic"] = io::polynomial_to_json(f.polynomial(), z04());
  return f;
}

const Json& require_input(const Inputs& in, const char* what) {
  if (!in.input) throw Error(ErrorCode::InvalidInput, std::string("--input with ") + what + " is required");
  return *in.input;
}

std::string quadruple_key(const Quadruple& q) {
  std::string s;
  for (int x : q) s += std::to_string(x);
  return s;
}

Json dims_json(const CohomologyReport& r) {
  Json dims = Json::array();
  for (long d : r.dims) dims.push_back(d);
  return dims;
}

Json alphas_json(const std::vector<Rational>& alphas, const std::vector<Quadruple>& quads) {
  Json out = Json::object();
  for (std::size_t n = 0; n < quads.size(); ++n) out[quadruple_key(quads[n])] = io::to_json(alphas[n]);
  return out;
}

Json residuals_json(const std::vector<quintic::Residual>& residuals) {
  Json out = Json::array();
  for (const auto& r : residuals) {
    Json e;
    e["equation"] = r.label;
    e["residual"] = io::to_json(r.value);
    out.push_back(e);
  }
  return out;
}

std::string strata_key(const CohomologyReport& r) {
  std::string s;
  for (const auto& [name, value] : r.ranks) s += (s.empty() ? "" : ",") + name + "=" + std::to_string(value);
  return s;
}

Json counts_json(const std::map<std::string, std::size_t>& counts) {
  Json out = Json::object();
  for (const auto& [k, v] : counts) out[k] = v;
  return out;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport cubic_verify(const Options& opts) {
  const Inputs in = load(opts);
  RunReport run{header("cubic verify", in)};
  Json& r = run.body;
  const cubic::CubicForm f = load_cubic(in, r);
  r["partials_rank"] = f.partials_rank();
  r["independent_partials"] = f.has_independent_partials();
  if (!f.has_independent_partials()) r["warning"] = "partials are dependent; the Plucker criterion is disabled";
  bool passed = f.has_independent_partials();
  try {
    const auto check = cubic::verify_bracket_table_chart(f);
    r["chart"] = "Z_" + std::to_string(check.chart_index) + "=1";
    Json entries = Json::object();
    for (const auto& e : check.entries) entries[quadruple_key(e.indices)] = e.passed;
    r["table_entries"] = entries;
    passed = passed && check.all_passed();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ChartDegenerate) throw;
    r["chart"] = nullptr;
    r["chart_error"] = e.what();
    passed = false;
  }
  r["passed"] = passed;
  run.exit_code = passed ? kPass : kMathFailure;
  return run;
}

RunReport cubic_cohomology(const Options& opts) {
  const Inputs in = load(opts);
  RunReport run{header("cubic cohomology", in)};
  Json& r = run.body;
  const cubic::CubicForm f = load_cubic(in, r);
  const So5Coeffs a = io::skew_from_json<So5Coeffs>(require_input(in, "{\"a\": ...}"));
  if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "the zero bivector is not a point of P(so(5))");
  r["omega"] = io::skew_to_json(a)["a"];
  const auto alphas = cubic::plucker_alphas(a);
  const auto check = cubic::check_poisson_cubic(f, a);
  r["poisson"] = check.poisson;
  r["alphas"] = alphas_json({alphas.begin(), alphas.end()}, So5Coeffs::quadruples());
  r["plucker_applicable"] = check.plucker_applicable;
  if (!check.poisson) {
    r["bracket_square"] = io::polynomial_to_json(cubic::bracket(cubic::bracket_table_cubic(f), a, a), z04());
    r["passed"] = false;
    run.exit_code = kMathFailure;
    return run;
  }
  const CohomologyReport report = cubic::cohomology_dims_cubic(f, a);
  r["rank_C"] = report.ranks.front().second;
  r["dims"] = dims_json(report);
  r["euler_characteristic"] = report.euler_characteristic();
  r["passed"] = true;
  return run;
}

RunReport quintic_verify(const Options& opts) {
  const Inputs in = load(opts);
  RunReport run{header("quintic verify", in)};
  Json& r = run.body;

  const auto model = quintic::check_model();
  Json mj;
  mj["quadrics_vanish"] = model.quadrics_vanish;
  mj["hyperplanes_vanish"] = model.hyperplanes_vanish;
  r["model"] = mj;

  const auto tangency = quintic::check_vector_fields();
  Json tj;
  tj["hyperplanes"] = tangency.hyperplanes;
  tj["chart_relations"] = tangency.relations;
  tj["chart_forms_match"] = tangency.chart_forms;
  tj["chart_rank"] = tangency.chart_rank;
  Json pairs = Json::array();
  for (const auto& [i, j] : tangency.identically_tangent) pairs.push_back("v" + std::to_string(i) + "(p" + std::to_string(j) + ")");
  tj["identically_zero"] = pairs;
  r["vector_fields"] = tj;

  bool bases_ok = true;
  Json bj;
  try {
    bj["epsilon_rank"] = quintic::bivector_basis_quintic().size();
    bj["z_rank"] = quintic::anticanonical_basis_quintic().size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IndependenceFailure) throw;
    bj["error"] = e.what();
    bases_ok = false;
  }
  r["bases"] = bj;

  const auto tables = quintic::verify_tables_quintic();
  std::size_t a_pass = 0, b_pass = 0;
  Json failures = Json::array();
  for (const auto& e : tables.a_entries) {
    if (e.passed) {
      ++a_pass;
    } else {
      failures.push_back("A" + std::to_string(e.i) + std::to_string(e.j) + std::to_string(e.k));
    }
  }
  for (const auto& e : tables.b_entries) {
    if (e.passed) {
      ++b_pass;
    } else {
      failures.push_back("B" + quadruple_key(e.indices));
    }
  }
  Json tab;
  tab["A_passed"] = std::to_string(a_pass) + "/" + std::to_string(tables.a_entries.size());
  tab["B_passed"] = std::to_string(b_pass) + "/" + std::to_string(tables.b_entries.size());
  tab["failures"] = failures;
  r["tables"] = tab;

  const bool passed = model.all_passed() && tangency.all_passed() && bases_ok && tables.all_passed();
  r["passed"] = passed;
  run.exit_code = passed ? kPass : kMathFailure;
  return run;
}

RunReport quintic_cohomology(const Options& opts) {
  const Inputs in = load(opts);
  RunReport run{header("quintic cohomology", in)};
  Json& r = run.body;
  const So7Coeffs a = io::skew_from_json<So7Coeffs>(require_input(in, "{\"a\": ...}"));
  if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "the zero bivector is not a point of P(so(7))");
  r["omega"] = io::skew_to_json(a)["a"];
  const auto check = quintic::check_poisson_quintic(a);
  r["poisson"] = check.poisson;
  if (!check.poisson) {
    std::vector<quintic::Residual> nonzero;
    for (auto& res : quintic::poisson_equations_quintic(a))
      if (!res.value.is_zero()) nonzero.push_back(res);
    r["residuals"] = residuals_json(nonzero);
    r["passed"] = false;
    run.exit_code = kMathFailure;
    return run;
  }
  const CohomologyReport report = quintic::cohomology_dims_quintic(a);
  r["rank_A"] = report.ranks[0].second;
  r["rank_B"] = report.ranks[1].second;
  r["dims"] = dims_json(report);
  r["euler_characteristic"] = report.euler_characteristic();
  r["passed"] = true;
  return run;
}

RunReport quintic_conic(const Options& opts) {
  const Inputs in = load(opts);
  RunReport run{header("quintic conic", in)};
  Json& r = run.body;
  const quintic::ConicPoint c = io::conic_from_json(require_input(in, "{\"a23\", \"a28\", \"a35\"}"));
  r["point"] = io::conic_to_json(c);
  if (!quintic::on_conic(c)) {
    r["on_conic"] = false;
    r["passed"] = false;
    run.exit_code = kMathFailure;
    return run;
  }
  r["on_conic"] = true;
  const So7Coeffs a = quintic::conic_embed(c);
  r["omega"] = io::skew_to_json(a)["a"];
  const auto d = quintic::conic_diagnostics(c);
  Json dj;
  dj["alpha_2358"] = io::to_json(d.alpha_2358);
  dj["alpha_0345"] = io::to_json(d.alpha_0345);
  dj["alpha_0134"] = io::to_json(d.alpha_0134);
  dj["closed_forms_match"] = d.closed_forms_match;
  r["diagnostics"] = dj;
  const bool poisson = quintic::is_poisson_quintic(a);
  r["poisson"] = poisson;
  bool passed = poisson && d.closed_forms_match;
  if (poisson) {
    const CohomologyReport report = quintic::cohomology_dims_quintic(a);
    r["rank_A"] = report.ranks[0].second;
    r["rank_B"] = report.ranks[1].second;
    r["dims"] = dims_json(report);
    r["euler_characteristic"] = report.euler_characteristic();
    passed = passed && report.euler_characteristic() == -4;
  }
  r["passed"] = passed;
  run.exit_code = passed ? kPass : kMathFailure;
  return run;
}

RunReport sweep(const Options& opts) {
  if (!opts.seed) throw Error(ErrorCode::InvalidInput, "sweep needs an explicit --seed");
  if (opts.count < 1) throw Error(ErrorCode::InvalidInput, "--count must be at least 1");
  const Inputs in = load(opts);
  RunReport run{header("sweep " + opts.target, in)};
  Json& r = run.body;
  r["seed"] = *opts.seed;
  r["count"] = opts.count;
  Sampler sampler(*opts.seed);
  bool passed = true;

  if (opts.target == "cubic") {
    const cubic::CubicForm f = load_cubic(in, r);
    std::map<std::string, std::size_t> strata;
    std::size_t poisson = 0, euler = 0, annihilated = 0;
    for (std::size_t n = 0; n < opts.count; ++n) {
      const So5Coeffs a = sampler.decomposable_so5();
      if (!cubic::is_poisson_cubic(f, a)) continue;
      ++poisson;
      const auto report = cubic::cohomology_dims_cubic(f, a);
      ++strata[strata_key(report)];
      if (report.euler_characteristic() == 6) ++euler;
      RationalVector av(a.values().begin(), a.values().end());
      if (is_zero(cubic::c_matrix(f, a) * av)) ++annihilated;
    }
    r["poisson"] = poisson;
    r["euler_characteristic_6"] = euler;
    r["self_annihilating"] = annihilated;
    r["strata"] = counts_json(strata);
    passed = poisson == opts.count && euler == opts.count && annihilated == opts.count;
  } else if (opts.target == "quintic") {
    auto run_family = [&](auto next, bool conic) {
      std::map<std::string, std::size_t> strata;
      std::size_t poisson = 0, euler = 0, annihilated = 0, off_grassmannian = 0;
      for (std::size_t n = 0; n < opts.count; ++n) {
        const So7Coeffs a = next();
        if (!quintic::is_poisson_quintic(a)) continue;
        ++poisson;
        const auto report = quintic::cohomology_dims_quintic(a);
        ++strata[strata_key(report)];
        if (report.euler_characteristic() == -4) ++euler;
        RationalVector av(a.values().begin(), a.values().end());
        if (is_zero(quintic::b_matrix(a) * av)) ++annihilated;
        const auto al = quintic::alphas(a);
        if (std::any_of(al.begin(), al.end(), [](const Rational& x) { return !x.is_zero(); })) ++off_grassmannian;
      }
      Json j;
      j["poisson"] = poisson;
      j["euler_characteristic_-4"] = euler;
      j["self_annihilating"] = annihilated;
      j["off_grassmannian"] = off_grassmannian;
      j["strata"] = counts_json(strata);
      const bool ok = poisson == opts.count && euler == opts.count && annihilated == opts.count &&
                      off_grassmannian == (conic ? opts.count : 0);
      return std::pair{j, ok};
    };
    auto [grass, grass_ok] = run_family([&] { return sampler.decomposable_so7(); }, false);
    auto [conic, conic_ok] = run_family([&] { return quintic::conic_embed(sampler.conic_point()); }, true);
    r["grassmannian"] = grass;
    r["conic"] = conic;
    passed = grass_ok && conic_ok;
  } else {
    throw Error(ErrorCode::InvalidInput, "sweep target must be cubic or quintic");
  }
  r["passed"] = passed;
  run.exit_code = passed ? kPass : kMathFailure;
  return run;
}

}  // namespace fano::cli
