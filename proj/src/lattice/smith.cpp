#include "strata/lattice/smith.hpp"

#include <algorithm>
#include <utility>

namespace strata::lattice {

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    q -= 1;
  return q;
}

}  // namespace

std::vector<Integer> elementary_divisors(IntegerMatrix m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m.front().size() : 0;
  for (const auto& r : m)
    if (r.size() != cols)
      fail("elementary_divisors: ragged matrix");

  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || abs_of(m[i][j]) < abs_of(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows)
        break;
      std::swap(m[t], m[pi]);
      for (auto& r : m)
        std::swap(r[t], r[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0)
          continue;
        Integer q = floor_div(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j)
          m[i][j] -= q * m[t][j];
        if (m[i][t] != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0)
          continue;
        Integer q = floor_div(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i)
          m[i][j] -= q * m[i][t];
        if (m[t][j] != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (m[t][t] == 0)
      break;
    diag.push_back(abs_of(m[t][t]));
  }

  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

RowReduction reduce_row(const std::vector<Integer>& a) {
  std::size_t n = a.size();
  std::vector<Integer> row = a;
  std::vector<std::vector<Integer>> cols(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    cols[i][i] = 1;

  // Euclid on the entries, mirrored as column operations on U.
  for (;;) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (row[i] != 0 && (p == n || abs_of(row[i]) < abs_of(row[p])))
        p = i;
    if (p == n)
      fail("reduce_row: zero row");
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p || row[i] == 0)
        continue;
      Integer q = floor_div(row[i], row[p]);
      row[i] -= q * row[p];
      for (std::size_t k = 0; k < n; ++k)
        cols[i][k] -= q * cols[p][k];
      if (row[i] != 0)
        done = false;
    }
    if (done) {
      std::swap(row[0], row[p]);
      std::swap(cols[0], cols[p]);
      break;
    }
  }
  if (row[0] < 0) {
    row[0] = -row[0];
    for (auto& x : cols[0])
      x = -x;
  }
  return {row[0], cols};
}

}  // namespace strata::lattice
