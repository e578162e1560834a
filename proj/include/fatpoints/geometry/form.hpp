#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/exactalg/rational.hpp"
#include "fatpoints/geometry/proj_point.hpp"

namespace fatpoints {

using Exponent = std::array<int, 3>;

inline std::size_t monomial_count(int degree) {
  return degree < 0 ? 0 : static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2;
}

/// Monomials x^a y^b z^c of the given degree in graded-lex order (x > y > z).
inline std::vector<Exponent> monomials(int degree) {
  std::vector<Exponent> out;
  out.reserve(monomial_count(degree));
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  return out;
}

// Position of a monomial in monomials(a+b+c).
inline std::size_t monomial_index(const Exponent& e) {
  const int d = e[0] + e[1] + e[2];
  const int a = e[0], b = e[1];
  // Monomials with x-exponent > a come first: sum_{k=0}^{d-a-1} (k+1).
  const std::size_t before = static_cast<std::size_t>(d - a) * static_cast<std::size_t>(d - a + 1) / 2;
  return before + static_cast<std::size_t>(d - a - b);
}

template <class E>
E power(E base, int e, E one) {
  E r = std::move(one);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Homogeneous polynomial in x, y, z over a field; coefficients follow
/// monomials(degree).
template <class Field>
class Form {
 public:
  using E = typename Field::element_type;

  Form(Field field, int degree) : field_(std::move(field)), degree_(degree), coeffs_(monomial_count(degree), field_.zero()) {
    if (degree < 0) throw invalid_input("Form: negative degree");
  }
  Form(Field field, int degree, std::vector<E> coeffs) : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != monomial_count(degree)) throw invalid_input("Form: coefficient count does not match degree");
  }

  // The linear form a x + b y + c z.
  static Form linear(const Field& k, const std::array<E, 3>& abc) { return Form(k, 1, {abc[0], abc[1], abc[2]}); }

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<E>& coefficients() const { return coeffs_; }

  E& operator[](const Exponent& e) { return coeffs_[monomial_index(e)]; }
  const E& operator[](const Exponent& e) const { return coeffs_[monomial_index(e)]; }

  bool is_zero_form() const {
    for (const auto& c : coeffs_)
      if (!is_zero(c)) return false;
    return true;
  }

  E operator()(const std::array<E, 3>& p) const {
    std::array<std::vector<E>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].assign(degree_ + 1, field_.one());
      for (int k = 1; k <= degree_; ++k) pw[v][k] = pw[v][k - 1] * p[v];
    }
    E s = field_.zero();
    const auto mons = monomials(degree_);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (is_zero(coeffs_[i])) continue;
      s += coeffs_[i] * pw[0][mons[i][0]] * pw[1][mons[i][1]] * pw[2][mons[i][2]];
    }
    return s;
  }
  E operator()(const ProjPoint<E>& p) const { return (*this)(p.coords()); }

  bool vanishes_at(const ProjPoint<E>& p) const { return is_zero((*this)(p)); }

  Form partial(int var) const {
    if (degree_ == 0) return Form(field_, 0);
    Form out(field_, degree_ - 1);
    const auto mons = monomials(degree_);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (mons[i][var] == 0 || is_zero(coeffs_[i])) continue;
      Exponent e = mons[i];
      const E f = field_.from_int(e[var]);
      --e[var];
      out[e] += coeffs_[i] * f;
    }
    return out;
  }

  std::array<E, 3> gradient(const ProjPoint<E>& p) const { return {partial(0)(p), partial(1)(p), partial(2)(p)}; }

  // Singular point of the curve: the form and its whole gradient vanish there.
  bool singular_at(const ProjPoint<E>& p) const {
    if (!vanishes_at(p)) return false;
    for (const auto& g : gradient(p))
      if (!is_zero(g)) return false;
    return true;
  }

  friend Form operator*(const Form& a, const Form& b) {
    Form out(a.field_, a.degree_ + b.degree_);
    const auto ma = monomials(a.degree_), mb = monomials(b.degree_);
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < mb.size(); ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        out[{ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2]}] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend Form operator+(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_) throw invalid_input("Form: adding forms of different degree");
    Form out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
  }

  Form scaled(const E& s) const {
    Form out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    const auto mons = monomials(degree_);
    bool first = true;
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (is_zero(coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << coeffs_[i];
      const char* names = "xyz";
      for (int v = 0; v < 3; ++v) {
        if (mons[i][v] == 0) continue;
        os << '*' << names[v];
        if (mons[i][v] > 1) os << '^' << mons[i][v];
      }
    }
    if (first) os << '0';
    return os.str();
  }

 private:
  Field field_;
  int degree_;
  std::vector<E> coeffs_;
};

/// Parses a homogeneous polynomial such as "x^2 + y^2 - 3/2*z^2" or "2x-y".
/// Coefficients are rationals mapped into the field by `embed`.
template <class Field, class Embed>
Form<Field> parse_form(const Field& k, const std::string& text, Embed embed) {
  struct Term {
    Rational coeff;
    Exponent exp;
  };
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> Form<Field> {
    throw invalid_input("cannot parse form '" + text + "': " + why);
  };
  skip();
  if (i == text.size()) fail("empty");
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!terms.empty()) {
      fail("expected '+' or '-'");
    }
    Term t{Rational(sign), {0, 0, 0}};
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (i > start) t.coeff *= parse_rational(text.substr(start, i - start));
    bool any = i > start;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i >= text.size()) break;
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
      if (c != 'x' && c != 'y' && c != 'z') break;
      ++i;
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t s = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (s == i) fail("missing exponent");
        e = std::stoi(text.substr(s, i - s));
      }
      t.exp[c - 'x'] += e;
      any = true;
    }
    if (!any) fail("empty term");
    terms.push_back(t);
    skip();
  }
  const int degree = terms.front().exp[0] + terms.front().exp[1] + terms.front().exp[2];
  Form<Field> f(k, degree);
  for (const auto& t : terms) {
    if (t.exp[0] + t.exp[1] + t.exp[2] != degree) fail("not homogeneous");
    f[t.exp] += embed(t.coeff);
  }
  return f;
}

}  // namespace fatpoints
