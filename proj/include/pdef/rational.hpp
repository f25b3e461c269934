#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pdef {

using Rational = mpq_class;
using Integer = mpz_class;

// Always "num/den", including integers ("3/1"), so JSON consumers never
// have to guess at the encoding.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "a", "a/b", "-a/b".
Rational parse_rational(std::string_view text);

// num/den in lowest terms.
Rational frac(const Integer& num, const Integer& den);

Rational pow(const Rational& base, std::uint64_t exponent);
Integer pow(const Integer& base, std::uint64_t exponent);

bool is_prime(std::uint64_t n);

// p-adic valuation of a positive integer.
unsigned valuation(std::uint64_t n, std::uint64_t p);

// Smallest integer >= q.
Integer ceil(const Rational& q);

// Rational or -infinity. Deficiency of an infinite presentation is -inf.
class ExtendedRational {
 public:
  ExtendedRational() : value_(Rational(0)) {}
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT

  static ExtendedRational negative_infinity() {
    ExtendedRational r;
    r.value_.reset();
    return r;
  }

  bool is_negative_infinity() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);

 private:
  std::optional<Rational> value_;
};

std::string to_string(const ExtendedRational& q);

}  // namespace pdef
