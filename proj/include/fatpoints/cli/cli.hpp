#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fatpoints/configs/configs.hpp"
#include "fatpoints/formulas/cubic_formulas.hpp"
#include "fatpoints/formulas/davis.hpp"
#include "fatpoints/formulas/nine_points.hpp"
#include "fatpoints/geometry/hilbert.hpp"
#include "fatpoints/geometry/point_file.hpp"
#include "fatpoints/verify/suites.hpp"

namespace fatpoints::cli {

enum Exit { ok = 0, verify_failed = 1, usage = 2, geometry = 3 };

inline std::uint64_t default_seed() {
  if (const char* s = std::getenv("FATPOINTS_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw invalid_input(std::string("FATPOINTS_SEED is not an unsigned integer: '") + s + "'");
  }
  return 42;
}

namespace detail {

inline std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

template <class Field>
void print_hv(std::ostream& out, const FatPointScheme<Field>& z, std::optional<int> tmax) {
  const auto h = tmax ? hilbert_function(z, *tmax) : hilbert_function(z);
  std::vector<long> dh(h.size());
  for (std::size_t t = 0; t < h.size(); ++t) dh[t] = h.values[t] - (t ? h.values[t - 1] : 0);
  out << "h: " << join(h.values) << "\n";
  out << "dh: " << HVector::difference(dh).to_string() << "\n";
}

inline std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw invalid_input("bad size list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

// s(t, n, m) for n points whose sum has order `order` (0: no torsion)
inline SFunction order_s(long order) {
  return [order](long t, long n, long m) -> long {
    if (m == 0 || 3 * t != n * m || order == 0) return 0;
    if (n == 9) return m / order;
    return m % order == 0 ? 1 : 0;
  };
}

}  // namespace detail

struct Options {
  // hv
  std::string point_file;
  int tmax = -1;
  std::uint32_t prime = 0;
  // config
  std::string config_case;
  std::string out_file;
  std::string sidecar;
  std::string sizes;
  int free_points = 0;
  long t = 0;
  long n = 0;
  int m = 2;
  std::string kind = "smooth";
  std::string sum = "generic";
  bool singular = false;
  // predict
  std::string formula;
  int nine_case = 0;
  std::string branch;
  long order = 0;
  std::string dh;
  // verify
  std::string suite;
  bool json = false;
  unsigned threads = 0;
  std::uint64_t seed = 0;
};

inline int run_hv(const Options& o, std::ostream& out) {
  std::ifstream in(o.point_file);
  if (!in) throw invalid_input("cannot read " + o.point_file);
  const auto pf = read_point_file(in);
  const std::optional<int> tmax = o.tmax >= 0 ? std::optional<int>(o.tmax) : std::nullopt;
  const std::uint32_t q = o.prime ? o.prime : pf.prime.value_or(0);
  if (q) {
    if (!is_prime(q) || q <= 3) throw invalid_input("--prime must be a prime above 3");
    detail::print_hv(out, to_scheme(pf, PrimeField(q)), tmax);
  } else {
    detail::print_hv(out, to_scheme(pf, RationalField()), tmax);
  }
  return ok;
}

inline int run_config(const Options& o, std::ostream& out) {
  Rng rng = derive_rng(o.seed, "config:" + o.config_case);
  PrimeField k(o.prime ? o.prime : random_prime(rng));
  if (o.prime && (!is_prime(o.prime) || o.prime <= 3)) throw invalid_input("--prime must be a prime above 3");
  std::optional<GeneratedConfig<PrimeField>> g;
  const std::string& c = o.config_case;
  if (c.rfind("nine.", 0) == 0) {
    const auto rest = c.substr(5);
    const auto dot = rest.find('.');
    const std::string num = rest.substr(0, dot);
    if (num.size() != 1 || num[0] < '1' || num[0] > '8') throw invalid_input("nine.<case>: case must be 1..8");
    const int cn = num[0] - '0';
    const std::string variant = dot == std::string::npos ? nine_variants(cn).front().name : rest.substr(dot + 1);
    g = gen_nine_case(k, cn, variant, rng);
  } else if (c == "split") {
    g = gen_collinear_split(k, detail::parse_sizes(o.sizes), o.free_points, rng);
  } else if (c == "ci") {
    g = gen_ci_cubic(k, o.t, rng);
  } else if (c == "on-cubic") {
    g = gen_on_cubic(k, parse_cubic_support(o.kind), o.n, o.m, SumSpec::parse(o.sum), o.singular, rng);
  } else {
    throw invalid_input("unknown case '" + c + "' (nine.<1-8>[.<variant>], split, ci, on-cubic)");
  }
  const auto z = g->target();
  std::ostringstream file;
  write_point_file(file, z);
  nlohmann::json side{{"case", g->name},
                      {"seed", o.seed},
                      {"field", k.modulus()},
                      {"points", z.size()},
                      {"multiplicity", g->multiplicity},
                      {"expected", g->expected ? nlohmann::json(g->expected->to_string()) : nlohmann::json(nullptr)},
                      {"expected_reduced", g->expected_reduced ? nlohmann::json(g->expected_reduced->to_string()) : nlohmann::json(nullptr)}};
  auto curves = nlohmann::json::array();
  for (const auto& f : g->curves) curves.push_back(f.to_string());
  side["curves"] = curves;

  if (o.out_file.empty()) {
    out << file.str();
  } else {
    std::ofstream(o.out_file) << file.str();
  }
  const std::string side_path = !o.sidecar.empty() ? o.sidecar : o.out_file.empty() ? "" : o.out_file + ".json";
  if (!side_path.empty()) std::ofstream(side_path) << side.dump(2) << "\n";
  return ok;
}

inline int run_predict(const Options& o, std::ostream& out) {
  const std::string& f = o.formula;
  if (f == "nine") {
    out << predict_nine_double(o.nine_case, o.branch).dh.to_string() << "\n";
  } else if (f == "ci") {
    out << predict_ci(o.t).dh.to_string() << "\n";
  } else if (f == "smooth-cubic") {
    out << predict_smooth_cubic(o.n, o.branch).dh.to_string() << "\n";
  } else if (f == "singular-cubic") {
    out << predict_singular_cubic(o.n, o.branch).dh.to_string() << "\n";
  } else if (f == "uniform") {
    out << predict_uniform(o.n, o.m, detail::order_s(o.order)).dh.to_string() << "\n";
  } else if (f == "singular-support") {
    const long tmax = o.tmax >= 0 ? o.tmax : 2 * (o.n + 1) / 3 + 3;
    out << detail::join(predict_singular_support(o.n, o.m, tmax, detail::order_s(o.order))) << "\n";
  } else if (f == "davis") {
    const auto sp = davis_split(HVector::parse(o.dh), o.t);
    out << sp.w1.to_string() << "\n" << sp.w2.to_string() << "\n";
  } else {
    throw invalid_input("unknown formula '" + f + "'");
  }
  return ok;
}

inline int run_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.seed = o.seed;
  so.threads = o.threads;
  if (o.tmax >= 0) so.ci_tmax = o.tmax;
  const auto results = run_suite(o.suite, so);
  out << format_report(results, o.json);
  return any_failed(results) ? verify_failed : ok;
}

/// Entry point; returns the process exit code.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Hilbert functions of fat points in the plane"};
  app.require_subcommand(1);
  Options o;
  bool have_seed = false;
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed (default: $FATPOINTS_SEED or 42)")->each([&](const std::string&) { have_seed = true; }); };

  auto* hv = app.add_subcommand("hv", "Hilbert function of the scheme in a point file");
  hv->add_option("pointfile", o.point_file, "point file: `x y z m` per line, optional `# field q` header")->required();
  hv->add_option("--tmax", o.tmax, "last degree (default: until the function stabilizes)");
  hv->add_option("--prime", o.prime, "reduce the coordinates modulo this prime");

  auto* config = app.add_subcommand("config", "generate a configuration as a point file with a JSON sidecar");
  config->add_option("--case", o.config_case,
                     "nine.<1-8>[.<variant>] | split | ci | on-cubic\n"
                     "nine variants: collinear 8+1 7+2 7+2-through 6+3 6+3-shared conic 5+4 5+4-shared 6+2+1 ci conic8+1 4+4+1\n"
                     "  5+3+1 conic5+line4 two-lines generic conic7+line3 conic7+2 line4+5 node+8 conic7+line-both triangle five-lines")
      ->required();
  config->add_option("--out", o.out_file, "point file (default: stdout)");
  config->add_option("--sidecar", o.sidecar, "JSON metadata (default: <out>.json)");
  config->add_option("--sizes", o.sizes, "split: comma separated line sizes");
  config->add_option("--free", o.free_points, "split: number of general points");
  config->add_option("--t", o.t, "ci: degree of the second curve");
  config->add_option("--n", o.n, "on-cubic: number of smooth points");
  config->add_option("--m", o.m, "on-cubic: multiplicity");
  config->add_option("--kind", o.kind, "on-cubic: smooth | nodal | cuspidal | conic-line | three-lines");
  config->add_option("--sum", o.sum, "on-cubic: generic | identity | order:<lambda>");
  config->add_flag("--singular", o.singular, "on-cubic: add the singular point");
  config->add_option("--prime", o.prime, "field characteristic (default: random 31-bit prime)");
  seed_opt(config);

  auto* predict = app.add_subcommand("predict", "print a predicted difference function");
  predict->add_option("--formula", o.formula, "nine | ci | smooth-cubic | singular-cubic | uniform | singular-support | davis")->required();
  predict->add_option("--case", o.nine_case, "nine: case 1..8");
  predict->add_option("--branch", o.branch,
                      "nine: max | min | <row>; smooth-cubic: a | b-i | b-ii; singular-cubic: d0 | d1-first | d1-second | d2");
  predict->add_option("--t", o.t, "ci: degree; davis: degree of maximal growth");
  predict->add_option("--n", o.n, "number of points");
  predict->add_option("--m", o.m, "multiplicity");
  predict->add_option("--order", o.order, "uniform, singular-support: order of the sum of the points (0: infinite)");
  predict->add_option("--tmax", o.tmax, "singular-support: last degree");
  predict->add_option("--dh", o.dh, "davis: difference function");

  auto* verify = app.add_subcommand("verify", "brute force against the predictions");
  verify->add_option("suite", o.suite, "table3 | ci | smooth-cubic | singular-cubic | uniform | singular-support | invariants | all")->required();
  verify->add_flag("--json", o.json, "JSON report");
  verify->add_option("--tmax", o.tmax, "ci: largest t (default 7)");
  verify->add_option("--threads", o.threads, "worker threads (default: all cores)");
  seed_opt(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  try {
    if (!have_seed) o.seed = default_seed();
    if (*hv) return run_hv(o, out);
    if (*config) return run_config(o, out);
    if (*predict) return run_predict(o, out);
    return run_verify(o, out);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const invalid_geometry& e) {
    err << "error: " << e.what() << "\n";
    return geometry;
  } catch (const generation_failure& e) {
    err << "error: " << e.what() << "\n";
    return verify_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace fatpoints::cli
