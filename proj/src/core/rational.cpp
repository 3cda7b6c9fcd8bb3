#include "strata/core/rational.hpp"

#include <algorithm>

namespace strata {

Integer floor_of(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num)
    quot -= 1;
  return quot;
}

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty())
    fail("cannot parse an empty rational");
  auto ok = [](char c) { return (c >= '0' && c <= '9') || c == '-' || c == '/'; };
  if (!std::all_of(text.begin(), text.end(), ok))
    fail("malformed rational '" + std::string(text) + "'");
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    fail("malformed rational '" + std::string(text) + "'");
  }
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    fail("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    fail("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = s * a[i];
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_integral(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

}  // namespace strata
