#pragma once

#include <string>
#include <vector>

#include "fatpoints/error.hpp"
#include "fatpoints/formulas/prediction.hpp"

namespace fatpoints {

/// Difference function of nine reduced points, one per case 1..8.
inline HVector nine_reduced(int c) {
  static const char* rows[] = {"1 1 1 1 1 1 1 1 1", "1 2 1 1 1 1 1 1", "1 2 2 1 1 1 1", "1 2 2 2 1 1",
                               "1 2 2 2 2",         "1 2 3 1 1 1",     "1 2 3 2 1",     "1 2 3 3"};
  if (c < 1 || c > 8) throw invalid_input("nine points: case must be 1..8");
  return HVector::parse(rows[c - 1]);
}

/// Every difference function of 2X for nine points X of the given case, in
/// table order. The first row is the maximum and the last the minimum.
inline std::vector<Prediction> nine_double_rows(int c) {
  static const std::vector<std::vector<const char*>> table = {
      {"1 2 2 2 2 2 2 2 2 2 1 1 1 1 1 1 1 1"},
      {"1 2 3 4 2 2 2 2 2 1 1 1 1 1 1 1"},
      {"1 2 3 4 4 3 2 2 1 1 1 1 1 1"},
      {"1 2 3 4 4 4 3 2 1 1 1 1"},
      {"1 2 3 4 4 4 4 2 2 1", "1 2 3 4 4 4 3 2 2 2"},
      {"1 2 3 4 5 5 2 1 1 1 1 1"},
      {"1 2 3 4 5 6 4 2", "1 2 3 4 5 6 3 2 1", "1 2 3 4 5 6 3 1 1 1", "1 2 3 4 5 6 2 2 1 1"},
      {"1 2 3 4 5 6 6", "1 2 3 4 5 6 5 1", "1 2 3 4 5 6 4 2", "1 2 3 4 5 6 3 3", "1 2 3 4 5 5 4 3"},
  };
  if (c < 1 || c > 8) throw invalid_input("nine points: case must be 1..8");
  const auto& rows = table[c - 1];
  std::vector<Prediction> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Prediction p{HVector::parse(rows[i]), "nine double points, case " + std::to_string(c), std::to_string(i + 1)};
    p.is_max = i == 0;
    p.is_min = i + 1 == rows.size();
    out.push_back(std::move(p));
  }
  return out;
}

/// branch: "max", "min", or a 1-based row number; empty means the only row.
inline Prediction predict_nine_double(int c, const std::string& branch = "") {
  const auto rows = nine_double_rows(c);
  if (branch.empty()) {
    if (rows.size() != 1) throw invalid_input("nine points case " + std::to_string(c) + " has several rows; name a branch");
    return rows[0];
  }
  if (branch == "max") return rows.front();
  if (branch == "min") return rows.back();
  std::size_t used = 0;
  long idx = 0;
  try {
    idx = std::stol(branch, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != branch.size() || idx < 1 || idx > static_cast<long>(rows.size()))
    throw invalid_input("nine points case " + std::to_string(c) + ": branch must be max, min or 1.." + std::to_string(rows.size()));
  return rows[static_cast<std::size_t>(idx - 1)];
}

/// Candidates that appear while classifying cases 7 and 8 but cannot occur.
inline std::vector<std::pair<int, HVector>> nine_double_excluded() {
  return {{7, HVector::parse("1 2 3 4 5 6 6")},     {7, HVector::parse("1 2 3 4 5 6 5 1")},
          {7, HVector::parse("1 2 3 4 5 6 4 1 1")}, {7, HVector::parse("1 2 3 4 5 6 3 3")},
          {7, HVector::parse("1 2 3 4 5 6 2 2 2")}, {8, HVector::parse("1 2 3 4 5 5 5 2")}};
}

}  // namespace fatpoints
