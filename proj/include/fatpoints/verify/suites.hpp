#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "fatpoints/configs/configs.hpp"
#include "fatpoints/formulas/cubic_formulas.hpp"
#include "fatpoints/formulas/davis.hpp"
#include "fatpoints/formulas/nine_points.hpp"
#include "fatpoints/geometry/hilbert.hpp"
#include "fatpoints/geometry/point_file.hpp"
#include "fatpoints/surface/surface.hpp"

namespace fatpoints {

enum class Status { pass, fail, skip };

inline std::string to_string(Status s) { return s == Status::pass ? "PASS" : s == Status::fail ? "FAIL" : "SKIP"; }

struct CaseResult {
  std::string id;
  Status status = Status::pass;
  std::string expected;
  std::string computed;
  std::string note;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  long ci_tmax = 7;
  int negative_seeds = 20;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CaseDef {
  std::string id;
  std::function<CaseResult(const std::string& id)> run;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table3", "ci", "smooth-cubic", "singular-cubic", "uniform", "singular-support", "invariants"};
  return names;
}

namespace verify_detail {

// A 31-bit prime q with 6 | q - 1, so the nodal group has points of order 2 and 3.
inline PrimeField suite_field(std::uint64_t seed) {
  Rng rng = derive_rng(seed, "field");
  for (;;) {
    const auto q = random_prime(rng);
    if (q % 6 == 1) return PrimeField(q);
  }
}

inline std::string pad(long v, int width = 2) {
  std::string s = std::to_string(v);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

inline CaseResult compare(const std::string& id, const std::string& expected, const std::string& computed) {
  return {id, expected == computed ? Status::pass : Status::fail, expected, computed, ""};
}

inline CaseResult compare(const std::string& id, const HVector& expected, const HVector& computed) {
  return compare(id, expected.to_string(), computed.to_string());
}

inline std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

template <class Field>
HVector brute(const GeneratedConfig<Field>& g) {
  return difference_function(g.target());
}


// ---- table3

inline std::vector<std::pair<std::vector<int>, int>> table_splits() {
  return {{{9}, 0}, {{8}, 1}, {{7}, 2}, {{6, 3}, 0}, {{5, 4}, 0}, {{6}, 3}, {{4, 4}, 1}, {{5, 3}, 1}};
}

inline void table3(const SuiteOptions& o, std::vector<CaseDef>& out) {
  const auto k = suite_field(o.seed);
  for (const auto& v : nine_variants()) {
    out.push_back({"table3.case" + std::to_string(v.case_no) + "." + v.name, [=](const std::string& id) {
                     Rng rng = derive_rng(o.seed, id);
                     const auto g = gen_nine_case(k, v.case_no, v.name, rng);
                     return compare(id, *g.expected, brute(g));
                   }});
  }
  for (const auto& [sizes, free] : table_splits()) {
    std::string name;
    for (int s : sizes) name += (name.empty() ? "" : "+") + std::to_string(s);
    if (free) name += "+" + std::to_string(free) + "free";
    out.push_back({"table3.split." + name, [=](const std::string& id) {
                     Rng rng = derive_rng(o.seed, id);
                     const auto g = gen_collinear_split(k, sizes, free, rng);
                     return compare(id, *g.expected, brute(g));
                   }});
  }
  for (int c : {7, 8}) {
    out.push_back({"table3.excluded.case" + std::to_string(c), [=](const std::string& id) {
                     std::vector<HVector> banned;
                     for (const auto& [cc, row] : nine_double_excluded())
                       if (cc == c) banned.push_back(row);
                     long configs = 0;
                     for (int s = 0; s < o.negative_seeds; ++s) {
                       for (const auto& v : nine_variants(c)) {
                         Rng rng = derive_rng(o.seed + static_cast<std::uint64_t>(s), id + "." + v.name);
                         const auto got = brute(gen_nine_case(k, c, v.name, rng));
                         ++configs;
                         for (const auto& b : banned)
                           if (got == b) return CaseResult{id, Status::fail, "absent", "found " + got.to_string() + " from " + v.name, ""};
                       }
                     }
                     return CaseResult{id, Status::pass, "absent", "absent", std::to_string(configs) + " configurations"};
                   }});
  }
}

// ---- ci

inline void ci(const SuiteOptions& o, std::vector<CaseDef>& out) {
  const auto k = suite_field(o.seed);
  for (long t = 3; t <= o.ci_tmax; ++t) {
    const std::string base = "ci.t" + pad(t);
    out.push_back({base, [=](const std::string& id) {
                     Rng rng = derive_rng(o.seed, id);
                     return compare(id, predict_ci(t).dh, brute(gen_ci_cubic(k, t, rng)));
                   }});
    out.push_back({base + ".reduced", [=](const std::string& id) {
                     Rng rng = derive_rng(o.seed, id);
                     return compare(id, predict_ci_reduced(t), difference_function(gen_ci_cubic(k, t, rng).scheme));
                   }});
  }
}

// ---- smooth-cubic: n = 3t + delta points, two values of t per delta

inline void smooth_cubic(const SuiteOptions& o, std::vector<CaseDef>& out) {
  const auto k = suite_field(o.seed);
  for (long delta = 0; delta <= 2; ++delta) {
    for (long t : {6 - delta, 7 - delta}) {
      const long n = 3 * t + delta;
      std::vector<std::pair<std::string, std::string>> branches;  // branch, sum spec
      if (delta == 0) {
        branches = {{"b-i", "generic"}, {"b-ii", "order:2"}};
      } else {
        branches = {{"a", "generic"}};
      }
      for (const auto& [branch, sum] : branches) {
        out.push_back({"smooth-cubic.n" + pad(n) + "." + branch, [=](const std::string& id) {
                         Rng rng = derive_rng(o.seed, id);
                         const auto g = gen_on_cubic(k, CubicSupport::smooth, n, 2, SumSpec::parse(sum), false, rng);
                         return compare(id, predict_smooth_cubic(n, branch).dh, brute(g));
                       }});
      }
    }
  }
}

// ---- singular-cubic: the node is one of the n = 3t + delta points

inline void singular_cubic(const SuiteOptions& o, std::vector<CaseDef>& out) {
  const auto k = suite_field(o.seed);
  for (long t : {4, 5}) {
    for (long delta = 0; delta <= 2; ++delta) {
      const long n = 3 * t + delta;
      std::vector<std::pair<std::string, std::string>> branches;
      if (delta == 0) branches = {{"d0", "generic"}};
      if (delta == 1) branches = {{"d1-first", "generic"}, {"d1-second", "identity"}};
      if (delta == 2) branches = {{"d2", "generic"}};
      for (const auto& [branch, sum] : branches) {
        out.push_back({"singular-cubic.n" + pad(n) + "." + branch, [=](const std::string& id) {
                         Rng rng = derive_rng(o.seed, id);
                         const auto g = gen_on_cubic(k, CubicSupport::nodal, n - 1, 2, SumSpec::parse(sum), true, rng);
                         return compare(id, predict_singular_cubic(n, branch).dh, brute(g));
                       }});
      }
    }
  }
}

// ---- uniform: evenly distributed points, brute force against the formula and the surface route

template <class Field>
CaseResult surface_check(const std::string& id, const GeneratedConfig<Field>& g) {
  const long n = static_cast<long>(g.scheme.size()), m = g.multiplicity;
  const auto s = g.s;
  const auto model = BlowupModel::evenly_distributed(n, [s, n](long t, long mm) { return s(t, n, mm); });
  const auto z = g.target();
  const int tmax = static_cast<int>(n * m / 3 + 2);
  std::vector<long> want, got;
  for (int t = 0; t <= tmax; ++t) {
    want.push_back(ideal_dim(z, t));
    got.push_back(h0_uniform(model, t, m));
  }
  return compare(id, join(want), join(got));
}

inline void uniform(const SuiteOptions& o, std::vector<CaseDef>& out) {
  const auto k = suite_field(o.seed);
  struct Item {
    CubicSupport kind;
    long n;
    std::string sum;
  };
  std::vector<Item> items;
  for (auto kind : {CubicSupport::smooth, CubicSupport::nodal})
    for (long n = 9; n <= 15; ++n) {
      items.push_back({kind, n, "generic"});
      items.push_back({kind, n, "identity"});
      if (n == 9 || n == 12) {
        items.push_back({kind, n, "order:2"});
        items.push_back({kind, n, "order:3"});
      }
    }
  for (auto kind : {CubicSupport::conic_line, CubicSupport::three_lines})
    for (long n : {9, 12, 15}) {
      items.push_back({kind, n, "generic"});
      items.push_back({kind, n, "identity"});
    }
  for (const auto& it : items) {
    for (int m = 1; m <= 3; ++m) {
      const std::string base = "uniform." + to_string(it.kind) + ".n" + pad(it.n) + ".m" + std::to_string(m) + "." + it.sum;
      auto make = [=](Rng& rng) { return gen_on_cubic(k, it.kind, it.n, m, SumSpec::parse(it.sum), false, rng); };
      out.push_back({base, [=](const std::string& id) {
                       Rng rng = derive_rng(o.seed, id);
                       const auto g = make(rng);
                       return compare(id, predict_uniform(it.n, m, g.s).dh, brute(g));
                     }});
      out.push_back({base + ".surface", [=](const std::string& id) {
                       Rng rng = derive_rng(o.seed, id);
                       return surface_check(id, make(rng));
                     }});
    }
  }
}

// ---- singular-support: h^0 of tL - m(E_1 + ... + E_n), p_1 the node

inline void singular_support(const SuiteOptions& o, std::vector<CaseDef>& out) {
  const auto k = suite_field(o.seed);
  for (long n : {10, 11, 12})
    for (int m : {1, 2})
      for (std::string sum : {"generic", "identity"}) {
        out.push_back({"singular-support.n" + pad(n) + ".m" + std::to_string(m) + "." + sum, [=](const std::string& id) {
                         Rng rng = derive_rng(o.seed, id);
                         const auto g = gen_on_cubic(k, CubicSupport::nodal, n - 1, m, SumSpec::parse(sum), true, rng);
                         const auto z = g.target();
                         std::vector<long> want, got;
                         for (long t = 0; t <= 2 * (n + 1) / 3 + 3; ++t) {
                           want.push_back(ideal_dim(z, static_cast<int>(t)));
                           got.push_back(singular_support_h0(n, m, t, g.s));
                         }
                         return compare(id, join(want), join(got));
                       }});
      }
}

// ---- invariants

// Products of the construction curves of total degree d.
template <class Field>
std::vector<Form<Field>> curve_products(const std::vector<Form<Field>>& curves, int d) {
  std::vector<Form<Field>> out;
  const std::size_t n = curves.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::optional<Form<Field>> f;
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        deg += curves[i].degree();
        f = f ? *f * curves[i] : curves[i];
      }
    if (deg == d) out.push_back(*f);
  }
  return out;
}

// Where X has maximal growth in degree t >= d, some construction curve F of
// degree d divides I(X)_t, carries sum(w1) points of X, and the rest has w2.
template <class Field>
CaseResult davis_check(const std::string& id, const GeneratedConfig<Field>& g) {
  const auto& x = g.scheme;
  const auto dh = difference_function(x);
  long splits = 0, audited = 0;
  for (long t = 0; t + 1 < static_cast<long>(dh.size()); ++t) {
    const long d = dh[static_cast<std::size_t>(t)];
    if (d < 1 || dh[static_cast<std::size_t>(t + 1)] != d) continue;
    const auto sp = davis_split(dh, t);
    ++splits;
    if (sp.w1.sum() + sp.w2.sum() != dh.sum())
      return {id, Status::fail, std::to_string(dh.sum()), std::to_string(sp.w1.sum() + sp.w2.sum()), "degree not conserved at t = " + std::to_string(t)};
    if (t < d || g.curves.empty()) continue;
    bool found = false;
    for (const auto& f : curve_products(g.curves, static_cast<int>(d))) {
      std::vector<ProjPoint<typename Field::element_type>> on, off;
      for (const auto& p : x.points()) (is_zero(f(p)) ? on : off).push_back(p);
      if (static_cast<long>(on.size()) != sp.w1.sum()) continue;
      const auto rest = FatPointScheme<Field>::uniform(x.field(), off, 1);
      if (ideal_dim(x, static_cast<int>(t)) != ideal_dim(rest, static_cast<int>(t - d))) continue;
      if (difference_function(rest) != sp.w2) continue;
      found = true;
      break;
    }
    if (!found) return {id, Status::fail, "forced curve of degree " + std::to_string(d), "none of the construction curves", "t = " + std::to_string(t)};
    ++audited;
  }
  return {id, Status::pass, "conserved", "conserved", std::to_string(splits) + " splits, " + std::to_string(audited) + " audited on curves"};
}

template <class Field>
std::vector<std::pair<std::string, std::function<GeneratedConfig<Field>(Rng&)>>> corpus(const Field& k) {
  std::vector<std::pair<std::string, std::function<GeneratedConfig<Field>(Rng&)>>> out;
  for (const auto& v : nine_variants())
    out.push_back({"case" + std::to_string(v.case_no) + "." + v.name, [=](Rng& r) { return gen_nine_case(k, v.case_no, v.name, r); }});
  for (long t = 3; t <= 5; ++t) out.push_back({"ci.t" + pad(t), [=](Rng& r) { return gen_ci_cubic(k, t, r); }});
  for (long n : {9, 12, 14}) {
    out.push_back({"smooth.n" + pad(n), [=](Rng& r) { return gen_on_cubic(k, CubicSupport::smooth, n, 2, SumSpec{}, false, r); }});
    out.push_back({"nodal-node.n" + pad(n + 1), [=](Rng& r) { return gen_on_cubic(k, CubicSupport::nodal, n, 2, SumSpec{}, true, r); }});
  }
  for (long n : {9, 12})
    for (auto kind : {CubicSupport::conic_line, CubicSupport::three_lines})
      out.push_back({to_string(kind) + ".n" + pad(n), [=](Rng& r) { return gen_on_cubic(k, kind, n, 2, SumSpec{}, false, r); }});
  return out;
}

inline CaseResult chi_check(const std::string& id, std::uint64_t seed) {
  Rng rng = derive_rng(seed, id);
  long checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(uniform_between(rng, 1, 15));
    auto rnd = [&] {
      DivisorClass c{uniform_between(rng, -20, 20), {}};
      for (std::size_t j = 0; j < n; ++j) c.e.push_back(uniform_between(rng, -8, 8));
      return c;
    };
    const auto a = rnd(), b = rnd(), c = rnd();
    const long x = uniform_between(rng, -5, 5), y = uniform_between(rng, -5, 5);
    const auto model = BlowupModel::evenly_distributed(static_cast<long>(n));
    const long twice = pair(a, a) - pair(model.canonical(), a);
    if (twice % 2 != 0) return {id, Status::fail, "even", "odd", a.to_string()};
    if (pair(a * x + b * y, c) != x * pair(a, c) + y * pair(b, c) || pair(a, b) != pair(b, a))
      return {id, Status::fail, "bilinear", "not bilinear", a.to_string()};
    ++checked;
  }
  return {id, Status::pass, "1000", std::to_string(checked), "random classes"};
}

// The same rational configuration reduced modulo three primes.
inline CaseResult field_independence(const std::string& id, int c, const std::string& variant, std::uint64_t seed) {
  Rng rng = derive_rng(seed, id);
  const auto g = gen_nine_case(RationalField(), c, variant, rng);
  PointFile pf;
  for (const auto& p : g.scheme.points()) {
    pf.coords.push_back(p.coords());
    pf.mults.push_back(2);
    pf.lines.push_back(pf.lines.size() + 1);
  }
  std::vector<std::string> seen;
  for (int i = 0; i < 3; ++i) {
    Rng prng = derive_rng(seed, id + ".prime" + std::to_string(i));
    const PrimeField k(random_prime(prng));
    seen.push_back(difference_function(to_scheme(pf, k)).to_string());
  }
  const bool same = seen[0] == seen[1] && seen[1] == seen[2] && seen[0] == g.expected->to_string();
  return {id, same ? Status::pass : Status::fail, g.expected->to_string(), same ? seen[0] : seen[0] + " / " + seen[1] + " / " + seen[2], ""};
}

inline void invariants(const SuiteOptions& o, std::vector<CaseDef>& out) {
  const auto k = suite_field(o.seed);
  for (const auto& [name, make] : corpus(k)) {
    out.push_back({"invariants.degree-sum." + name, [=, make = make](const std::string& id) {
                     Rng rng = derive_rng(o.seed, id);
                     const auto g = make(rng);
                     return compare(id, std::to_string(g.target().degree()), std::to_string(brute(g).sum()));
                   }});
    out.push_back({"invariants.regularity." + name, [=, make = make](const std::string& id) {
                     Rng rng = derive_rng(o.seed, id);
                     const auto g = make(rng);
                     const long r2 = regularity(g.scheme.doubled()), bound = regularity_bound(regularity(g.scheme));
                     return CaseResult{id, r2 <= bound ? Status::pass : Status::fail, "<= " + std::to_string(bound), std::to_string(r2), ""};
                   }});
    out.push_back({"invariants.davis." + name, [=, make = make](const std::string& id) {
                     Rng rng = derive_rng(o.seed, id);
                     return davis_check(id, make(rng));
                   }});
  }
  out.push_back({"invariants.chi", [=](const std::string& id) { return chi_check(id, o.seed); }});
  for (const auto& v : nine_variants()) {
    if (v.name == "ci" || v.name == "node+8") continue;  // group-law points grow too fast over Q
    out.push_back({"invariants.field-independence.case" + std::to_string(v.case_no) + "." + v.name,
                   [=](const std::string& id) { return field_independence(id, v.case_no, v.name, o.seed); }});
  }
}

inline CaseResult run_case(const CaseDef& c) {
  try {
    return c.run(c.id);
  } catch (const generation_failure& e) {
    return {c.id, Status::skip, "", "", e.what()};
  } catch (const std::exception& e) {
    return {c.id, Status::fail, "", "", e.what()};
  }
}

}  // namespace verify_detail

inline std::vector<CaseDef> suite_cases(const std::string& suite, const SuiteOptions& o) {
  std::vector<CaseDef> out;
  auto add = [&](const std::string& name) {
    if (name == "table3") verify_detail::table3(o, out);
    else if (name == "ci") verify_detail::ci(o, out);
    else if (name == "smooth-cubic") verify_detail::smooth_cubic(o, out);
    else if (name == "singular-cubic") verify_detail::singular_cubic(o, out);
    else if (name == "uniform") verify_detail::uniform(o, out);
    else if (name == "singular-support") verify_detail::singular_support(o, out);
    else if (name == "invariants") verify_detail::invariants(o, out);
    else throw invalid_input("unknown suite '" + name + "'");
  };
  if (suite == "all") {
    for (const auto& s : suite_names()) add(s);
  } else {
    add(suite);
  }
  return out;
}

/// Runs every case, possibly on several threads; results are sorted by id.
inline std::vector<CaseResult> run_suite(const std::string& suite, const SuiteOptions& o = {}) {
  const auto cases = suite_cases(suite, o);
  std::vector<CaseResult> results(cases.size());
  unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) results[i] = verify_detail::run_case(cases[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  return results;
}

inline bool any_failed(const std::vector<CaseResult>& rs) {
  return std::any_of(rs.begin(), rs.end(), [](const CaseResult& r) { return r.status == Status::fail; });
}

inline std::string format_report(const std::vector<CaseResult>& rs, bool json) {
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rs) {
      nlohmann::json j{{"case", r.id}, {"expected", r.expected}, {"computed", r.computed}, {"status", to_string(r.status)}};
      if (!r.note.empty()) j["note"] = r.note;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  long counts[3] = {0, 0, 0};
  for (const auto& r : rs) {
    ++counts[static_cast<int>(r.status)];
    os << to_string(r.status) << ' ' << r.id;
    if (r.status == Status::skip) {
      os << "  (" << r.note << ")\n";
      continue;
    }
    os << "  expected: " << r.expected << "  computed: " << r.computed;
    if (r.status == Status::fail && !r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  os << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  return os.str();
}

}  // namespace fatpoints
