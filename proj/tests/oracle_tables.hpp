#pragma once

// Frozen output of tools/oracle/grassmann_tables.py (sympy grevlex Groebner
// bases and standard-monomial counting), one row per (n, k, alpha, beta).

#include <vector>

namespace oracle {

struct GrassmannRow {
  int n, k, alpha, beta, cutoff;
  std::vector<long long> oriented, unoriented, ordinary, ordinary_unoriented;
};

inline const std::vector<GrassmannRow>& grassmann_rows() {
  static const std::vector<GrassmannRow> rows = {
      {1, 1, 0, 0, 8,
       {1, 0, 4, 0, 8, 0, 12, 0, 16},
       {1, 0, 0, 0, 4, 0, 0, 0, 8},
       {1, 0, 2, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 0}},
      {1, 1, 0, 1, 10,
       {1, 0, 2, 0, 4, 0, 6, 0, 8, 0, 10},
       {1, 0, 0, 0, 3, 0, 0, 0, 5, 0, 0},
       {1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
      {1, 1, 1, 0, 10,
       {1, 0, 2, 0, 4, 0, 6, 0, 8, 0, 10},
       {1, 0, 0, 0, 3, 0, 0, 0, 5, 0, 0},
       {1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
      {1, 1, 1, 1, 13,
       {1, 0, 0, 0, 3, 1, 0, 0, 5, 3, 0, 0, 7, 5},
       {1, 0, 0, 0, 3, 1, 0, 0, 5, 3, 0, 0, 7, 5},
       {1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
      {1, 2, 0, 0, 12,
       {1, 0, 2, 0, 6, 0, 9, 0, 17, 0, 22, 0, 34},
       {1, 0, 0, 0, 3, 0, 1, 0, 7, 0, 3, 0, 12},
       {1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
      {1, 2, 0, 1, 14,
       {1, 0, 2, 0, 4, 0, 6, 0, 10, 0, 14, 0, 19, 0, 24},
       {1, 0, 0, 0, 3, 0, 0, 0, 7, 0, 0, 0, 12, 0, 0},
       {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
      {1, 2, 1, 0, 16,
       {1, 0, 0, 0, 5, 0, 0, 0, 14, 0, 0, 0, 29, 0, 0, 0, 50},
       {1, 0, 0, 0, 3, 0, 0, 0, 7, 0, 0, 0, 12, 0, 0, 0, 19},
       {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {1, 2, 1, 1, 19,
       {1, 0, 0, 0, 3, 0, 0, 1, 7, 0, 0, 3, 12, 0, 0, 7, 19, 0, 0, 12},
       {1, 0, 0, 0, 3, 0, 0, 1, 7, 0, 0, 3, 12, 0, 0, 7, 19, 0, 0, 12},
       {1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
      {2, 1, 0, 0, 12,
       {1, 0, 2, 0, 6, 0, 9, 0, 17, 0, 22, 0, 34},
       {1, 0, 0, 0, 3, 0, 1, 0, 7, 0, 3, 0, 12},
       {1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
      {2, 1, 0, 1, 16,
       {1, 0, 0, 0, 5, 0, 0, 0, 14, 0, 0, 0, 29, 0, 0, 0, 50},
       {1, 0, 0, 0, 3, 0, 0, 0, 7, 0, 0, 0, 12, 0, 0, 0, 19},
       {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {2, 1, 1, 0, 14,
       {1, 0, 2, 0, 4, 0, 6, 0, 10, 0, 14, 0, 19, 0, 24},
       {1, 0, 0, 0, 3, 0, 0, 0, 7, 0, 0, 0, 12, 0, 0},
       {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
      {2, 1, 1, 1, 19,
       {1, 0, 0, 0, 3, 0, 0, 1, 7, 0, 0, 3, 12, 0, 0, 7, 19, 0, 0, 12},
       {1, 0, 0, 0, 3, 0, 0, 1, 7, 0, 0, 3, 12, 0, 0, 7, 19, 0, 0, 12},
       {1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
      {2, 2, 0, 0, 20,
       {1, 0, 0, 0, 7, 0, 0, 0, 26, 0, 0, 0, 69, 0, 0, 0, 148, 0, 0, 0, 275},
       {1, 0, 0, 0, 3, 0, 0, 0, 10, 0, 0, 0, 21, 0, 0, 0, 44, 0, 0, 0, 75},
       {1, 0, 0, 0, 3, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
      {2, 2, 0, 1, 24,
       {1, 0, 0, 0, 5, 0, 0, 0, 16, 0, 0, 0, 39, 0, 0, 0, 80, 0, 0, 0, 145, 0, 0, 0, 240},
       {1, 0, 0, 0, 3, 0, 0, 0, 9, 0, 0, 0, 18, 0, 0, 0, 35, 0, 0, 0, 57, 0, 0, 0, 91},
       {1, 0, 0, 0, 2, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {2, 2, 1, 0, 24,
       {1, 0, 0, 0, 5, 0, 0, 0, 16, 0, 0, 0, 39, 0, 0, 0, 80, 0, 0, 0, 145, 0, 0, 0, 240},
       {1, 0, 0, 0, 3, 0, 0, 0, 9, 0, 0, 0, 18, 0, 0, 0, 35, 0, 0, 0, 57, 0, 0, 0, 91},
       {1, 0, 0, 0, 2, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {2, 2, 1, 1, 24,
       {1, 0, 0, 0, 3, 0, 0, 0, 9, 1, 0, 0, 18, 3, 0, 0, 35, 9, 0, 0, 57, 18, 0, 0, 91},
       {1, 0, 0, 0, 3, 0, 0, 0, 9, 1, 0, 0, 18, 3, 0, 0, 35, 9, 0, 0, 57, 18, 0, 0, 91},
       {1, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0, 0, 1, 1, 0, 0, 1, 2, 0, 0, 0, 1, 0, 0, 0},
       {1, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0, 0, 1, 1, 0, 0, 1, 2, 0, 0, 0, 1, 0, 0, 0}},
  };
  return rows;
}

}  // namespace oracle
