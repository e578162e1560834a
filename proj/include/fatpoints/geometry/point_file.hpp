#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/embed.hpp"
#include "fatpoints/exactalg/modp.hpp"
#include "fatpoints/exactalg/rational.hpp"
#include "fatpoints/geometry/scheme.hpp"

namespace fatpoints {

/// Contents of a point file, before the coordinates are mapped into a field.
///
///   # field 1000003        (optional; rationals otherwise)
///   x y z m                (one point per line, a/b allowed)
struct PointFile {
  std::optional<std::uint32_t> prime;
  std::vector<std::array<Rational, 3>> coords;
  std::vector<int> mults;
  std::vector<std::size_t> lines;  // source line of each point
};

inline PointFile read_point_file(std::istream& in) {
  PointFile pf;
  std::string line;
  std::size_t lineno = 0;
  bool seen_point = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string word;
      if (!seen_point && !pf.prime && (hs >> word) && word == "field") {
        std::string qtext, extra;
        if (!(hs >> qtext) || (hs >> extra)) throw parse_error(lineno, "expected '# field q'");
        std::uint64_t q = 0;
        try {
          std::size_t used = 0;
          q = std::stoull(qtext, &used);
          if (used != qtext.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw parse_error(lineno, "bad field size '" + qtext + "'");
        }
        if (q <= 3 || q >= (1ULL << 31) || !is_prime(q)) throw parse_error(lineno, "field size must be a prime in (3, 2^31)");
        pf.prime = static_cast<std::uint32_t>(q);
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) {
      if (w[0] == '#') break;
      tok.push_back(w);
    }
    if (tok.size() != 4) throw parse_error(lineno, "expected 'x y z m', got " + std::to_string(tok.size()) + " fields");
    std::array<Rational, 3> c;
    for (int i = 0; i < 3; ++i) {
      try {
        c[i] = parse_rational(tok[i]);
      } catch (const invalid_input& e) {
        throw parse_error(lineno, e.what());
      }
    }
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(tok[3], &used);
      if (used != tok[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw parse_error(lineno, "bad multiplicity '" + tok[3] + "'");
    }
    if (m < 1) throw parse_error(lineno, "multiplicity must be at least 1");
    pf.coords.push_back(c);
    pf.mults.push_back(m);
    pf.lines.push_back(lineno);
    seen_point = true;
  }
  return pf;
}

inline PointFile read_point_file(const std::string& text) {
  std::istringstream in(text);
  return read_point_file(in);
}

/// Maps the file into `k`. Zero points and duplicates are invalid geometry.
template <class Field>
FatPointScheme<Field> to_scheme(const PointFile& pf, const Field& k) {
  using E = typename Field::element_type;
  std::vector<ProjPoint<E>> pts;
  for (std::size_t i = 0; i < pf.coords.size(); ++i) {
    try {
      pts.emplace_back(embed(k, pf.coords[i][0]), embed(k, pf.coords[i][1]), embed(k, pf.coords[i][2]));
    } catch (const invalid_geometry& e) {
      throw invalid_geometry("line " + std::to_string(pf.lines[i]) + ": " + e.what());
    }
  }
  return FatPointScheme<Field>(k, std::move(pts), pf.mults);
}

namespace detail {
inline void write_field_header(std::ostream& os, const PrimeField& k) { os << "# field " << k.modulus() << '\n'; }
inline void write_field_header(std::ostream&, const RationalField&) {}
}  // namespace detail

template <class Field>
void write_point_file(std::ostream& os, const FatPointScheme<Field>& z) {
  detail::write_field_header(os, z.field());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto& p = z.points()[i];
    os << p.x() << ' ' << p.y() << ' ' << p.z() << ' ' << z.multiplicities()[i] << '\n';
  }
}

}  // namespace fatpoints
