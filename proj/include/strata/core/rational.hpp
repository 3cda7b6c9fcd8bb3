#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace strata {

// Expression templates are off so that `auto` never captures a dangling
// temporary.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Vector = std::vector<Rational>;

// Every failed invariant or rejected input in the library surfaces as this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q))
    fail("expected an integer, got " + q.str());
  return boost::multiprecision::numerator(q);
}

// Largest integer <= q.
Integer floor_of(const Rational& q);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

std::string to_string(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& a);
bool is_zero(const Vector& v);
bool is_integral(const Vector& v);

}  // namespace strata
