#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoints/cubicgroup/curve.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/embed.hpp"
#include "fatpoints/exactalg/modp.hpp"
#include "fatpoints/exactalg/rational.hpp"
#include "fatpoints/geometry/form.hpp"

namespace fatpoints {

/// Parsed curve description, independent of the field:
///   weierstrass a b [q] | nodal [q] | cuspidal [q] | reducible f;g[;h]
struct CurveSpec {
  CubicKind kind = CubicKind::weierstrass;
  Rational a, b;
  std::optional<std::uint32_t> prime;
  std::vector<std::string> components;
};

inline CurveSpec parse_curve_spec(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head)) throw invalid_input("empty curve spec");
  CurveSpec spec;
  auto read_prime = [&](std::istringstream& s) {
    std::string w, extra;
    if (!(s >> w)) return;
    if (s >> extra) throw invalid_input("curve spec: unexpected '" + extra + "'");
    std::uint64_t q = 0;
    try {
      std::size_t used = 0;
      q = std::stoull(w, &used);
      if (used != w.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw invalid_input("curve spec: bad prime '" + w + "'");
    }
    if (q <= 3 || q >= (1ULL << 31) || !is_prime(q)) throw invalid_input("curve spec: field size must be a prime in (3, 2^31)");
    spec.prime = static_cast<std::uint32_t>(q);
  };
  if (head == "weierstrass") {
    std::string a, b;
    if (!(in >> a >> b)) throw invalid_input("curve spec: weierstrass needs a and b");
    spec.a = parse_rational(a);
    spec.b = parse_rational(b);
    read_prime(in);
  } else if (head == "nodal") {
    spec.kind = CubicKind::nodal;
    read_prime(in);
  } else if (head == "cuspidal") {
    spec.kind = CubicKind::cuspidal;
    read_prime(in);
  } else if (head == "reducible") {
    spec.kind = CubicKind::reducible;
    std::string rest;
    std::getline(in, rest);
    std::size_t start = 0;
    for (;;) {
      const auto semi = rest.find(';', start);
      spec.components.push_back(rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (spec.components.size() < 2 || spec.components.size() > 3) throw invalid_input("curve spec: reducible needs 2 or 3 components");
  } else {
    throw invalid_input("unknown curve kind '" + head + "' (weierstrass, nodal, cuspidal, reducible)");
  }
  return spec;
}

template <class Field>
CubicCurve<Field> make_curve(const CurveSpec& spec, const Field& k) {
  auto emb = [&](const Rational& r) { return embed(k, r); };
  switch (spec.kind) {
    case CubicKind::weierstrass: return CubicCurve<Field>::weierstrass(k, emb(spec.a), emb(spec.b));
    case CubicKind::nodal: return CubicCurve<Field>::nodal(k);
    case CubicKind::cuspidal: return CubicCurve<Field>::cuspidal(k);
    default: {
      std::vector<Form<Field>> comps;
      for (const auto& c : spec.components) comps.push_back(parse_form(k, c, emb));
      return CubicCurve<Field>::reducible(k, std::move(comps));
    }
  }
}

}  // namespace fatpoints
