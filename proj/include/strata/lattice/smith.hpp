#pragma once

#include <optional>
#include <vector>

#include "strata/core/rational.hpp"

namespace strata::lattice {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix (any shape).
std::vector<Integer> elementary_divisors(IntegerMatrix m);

// For a nonzero integer row a, a unimodular n x n matrix U (as columns) with
// a * U = (g, 0, ..., 0) and g = gcd(a) > 0. Column 0 of U pairs to g; the
// remaining columns are a Z-basis of the kernel of a.
struct RowReduction {
  Integer gcd;
  std::vector<std::vector<Integer>> columns;
};
RowReduction reduce_row(const std::vector<Integer>& a);

}  // namespace strata::lattice
