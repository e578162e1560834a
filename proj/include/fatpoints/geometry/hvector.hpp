#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoints/error.hpp"

namespace fatpoints {

/// A finite integer sequence indexed by degree: either a Hilbert function
/// h(0..T) or its first difference.
struct HVector {
  enum class Kind { hilbert, difference };

  std::vector<long> values;
  Kind kind = Kind::difference;

  static HVector difference(std::vector<long> v) {
    HVector h{std::move(v), Kind::difference};
    h.trim();
    return h;
  }
  static HVector hilbert(std::vector<long> v) { return HVector{std::move(v), Kind::hilbert}; }

  static HVector parse(const std::string& text, Kind kind = Kind::difference) {
    std::istringstream in(text);
    std::vector<long> v;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long x = 0;
      try {
        x = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw invalid_input("HVector: bad entry '" + tok + "'");
      v.push_back(x);
    }
    return kind == Kind::difference ? difference(std::move(v)) : hilbert(std::move(v));
  }

  std::size_t size() const { return values.size(); }
  long operator[](std::size_t i) const { return i < values.size() ? values[i] : (kind == Kind::difference || values.empty() ? 0 : values.back()); }

  long sum() const { return std::accumulate(values.begin(), values.end(), 0L); }

  void trim() {
    while (!values.empty() && values.back() == 0) values.pop_back();
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(values[i]);
    }
    return s;
  }

  friend bool operator==(const HVector& a, const HVector& b) { return a.kind == b.kind && a.values == b.values; }
  friend bool operator!=(const HVector& a, const HVector& b) { return !(a == b); }
};

/// First difference of a Hilbert function. The input must already have
/// stabilized (last two values equal), otherwise the degree sum would be wrong.
inline HVector difference_function(const HVector& h) {
  if (h.kind != HVector::Kind::hilbert) throw invalid_input("difference_function: expects a Hilbert function");
  if (h.values.size() >= 2 && h.values[h.size() - 1] != h.values[h.size() - 2]) {
    throw out_of_domain("difference_function: Hilbert function has not stabilized");
  }
  if (h.values.size() < 2 && !(h.values.empty() || h.values[0] == 0)) {
    throw out_of_domain("difference_function: Hilbert function has not stabilized");
  }
  std::vector<long> d(h.values.size());
  for (std::size_t t = 0; t < d.size(); ++t) d[t] = h.values[t] - (t ? h.values[t - 1] : 0);
  return HVector::difference(std::move(d));
}

// Partial sums of a difference function: the Hilbert function up to length n.
inline HVector integrate(const HVector& dh, std::size_t n) {
  std::vector<long> h(n);
  long acc = 0;
  for (std::size_t t = 0; t < n; ++t) {
    acc += dh[t];
    h[t] = acc;
  }
  return HVector::hilbert(std::move(h));
}

}  // namespace fatpoints
