#include "strata/lattice/enumerate.hpp"

#include <algorithm>

#include "strata/lattice/smith.hpp"

namespace strata::lattice {

namespace {

// Clears denominators of a rational row and divides out the content.
// Returns (primitive integer row, scale) with row_in = scale * row_out.
std::pair<std::vector<Integer>, Rational> primitive_row(const Vector& row) {
  Integer lcm = 1;
  for (const auto& q : row)
    lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(q)));
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& q : row) {
    ints.push_back(to_integer(q * lcm));
    content = boost::multiprecision::gcd(content, ints.back());
  }
  if (content == 0)
    return {ints, Rational(0)};
  for (auto& x : ints)
    x /= content;
  return {ints, Rational(content) / Rational(lcm)};
}

Vector to_vector(const std::vector<Integer>& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v)
    out.emplace_back(x);
  return out;
}

}  // namespace

void for_each_short_vector(const Matrix& form, const Vector& center, const Rational& bound,
                           const std::function<void(const Vector&)>& visit) {
  std::size_t k = form.rows();
  if (center.size() != k)
    fail("short vector search: center has wrong length");
  if (k == 0) {
    if (bound >= 0)
      visit(Vector{});
    return;
  }
  if (bound < 0)
    return;

  // q(x) = sum_i q_ii (y_i + sum_{j>i} q_ij y_j)^2 with y = x - center.
  Matrix q = form;
  for (std::size_t i = 0; i < k; ++i) {
    if (q(i, i) <= 0)
      fail("search region is unbounded: form is not definite on the searched space");
    for (std::size_t j = i + 1; j < k; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t l = i + 1; l < k; ++l)
      for (std::size_t m = l; m < k; ++m)
        q(l, m) -= q(l, i) * q(i, m);
  }

  Vector x(k);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level,
                                                                  const Rational& remaining) {
    Rational mid = center[level];
    for (std::size_t j = level + 1; j < k; ++j)
      mid -= q(level, j) * (x[j] - center[j]);
    auto cost = [&](const Integer& xi) -> Rational {
      Rational d = Rational(xi) - mid;
      return q(level, level) * d * d;
    };
    auto step = [&](const Integer& xi) {
      Rational c = cost(xi);
      if (c > remaining)
        return false;
      x[level] = Rational(xi);
      if (level == 0)
        visit(x);
      else
        descend(level - 1, remaining - c);
      return true;
    };
    Integer start = floor_of(mid);
    for (Integer xi = start; step(xi); --xi) {
    }
    for (Integer xi = start + 1; step(xi); ++xi) {
    }
  };
  descend(k - 1, bound);
}

std::vector<LatticeVector> orthogonal_complement_basis(const LatticeVector& w) {
  const auto& lat = w.ambient();
  auto [row, scale] = primitive_row(lat->gram() * w.coords());
  std::vector<LatticeVector> basis;
  if (scale == 0) {
    for (std::size_t i = 0; i < lat->rank(); ++i)
      basis.push_back(LatticeVector::basis(lat, i));
    return basis;
  }
  auto red = reduce_row(row);
  for (std::size_t i = 1; i < red.columns.size(); ++i)
    basis.emplace_back(lat, to_vector(red.columns[i]));
  return basis;
}

std::vector<LatticeVector> enumerate_vectors(const LatticePtr& lattice, const Rational& square,
                                             const std::optional<LevelCondition>& level) {
  std::size_t n = lattice->rank();
  Vector base = zero_vector(n);
  std::vector<Vector> dirs;

  if (!level) {
    for (std::size_t i = 0; i < n; ++i)
      dirs.push_back(unit_vector(n, i));
  } else {
    if (level->against.ambient()->rank() != n)
      fail("level condition lives in a different lattice");
    auto [row, scale] = primitive_row(lattice->gram() * level->against.coords());
    if (scale == 0) {
      if (level->value != 0)
        return {};
      for (std::size_t i = 0; i < n; ++i)
        dirs.push_back(unit_vector(n, i));
    } else {
      Rational target = level->value / scale;  // row . v must equal this
      if (!is_integral(target))
        return {};
      auto red = reduce_row(row);
      Integer t = to_integer(target);
      if (t % red.gcd != 0)
        return {};
      base = Rational(t / red.gcd) * to_vector(red.columns[0]);
      for (std::size_t i = 1; i < red.columns.size(); ++i)
        dirs.push_back(to_vector(red.columns[i]));
    }
  }

  // v = base + B x;  v.v = base.base + 2 h.x + x^T H x with H = B^T G B.
  std::size_t k = dirs.size();
  Matrix form(k, k);
  Vector h(k);
  for (std::size_t i = 0; i < k; ++i) {
    h[i] = lattice->pair(dirs[i], base);
    for (std::size_t j = 0; j < k; ++j)
      form(i, j) = -lattice->pair(dirs[i], dirs[j]);  // positive definite when bounded
  }
  Rational base_sq = lattice->pair(base, base);

  // -(x^T P x) + 2 h.x + base_sq = square  <=>  (x - c)^T P (x - c) = r, c = P^-1 h.
  Vector center = zero_vector(k);
  Rational bound = base_sq - square;
  if (k > 0) {
    for (std::size_t i = 0; i < k; ++i)
      if (form(i, i) <= 0)
        fail("search region is unbounded: form is not negative definite on the searched space");
    if (determinant(form) == 0)
      fail("search region is unbounded: form is degenerate on the searched space");
    center = inverse(form) * h;
    for (std::size_t i = 0; i < k; ++i)
      bound += h[i] * center[i];
  }

  std::vector<LatticeVector> out;
  for_each_short_vector(form, center, bound, [&](const Vector& x) {
    Vector v = base;
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] != 0)
        v = v + x[i] * dirs[i];
    if (lattice->pair(v, v) == square)
      out.emplace_back(lattice, std::move(v));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> enumerate_roots(const LatticePtr& lattice,
                                           const std::optional<LatticeVector>& orthogonal_to) {
  if (orthogonal_to)
    return enumerate_vectors(lattice, Rational(-2), LevelCondition{*orthogonal_to, Rational(0)});
  return enumerate_vectors(lattice, Rational(-2));
}

}  // namespace strata::lattice
