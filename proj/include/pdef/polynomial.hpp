#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdef/rational.hpp"

namespace pdef {

// Dense univariate polynomial with rational coefficients, lowest degree
// first. No trailing zero coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coefficients);
  static QPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept {
    return coeffs_;
  }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;  // Horner
  int sign_at(const Rational& t) const;

  QPoly derivative() const;
  QPoly monic() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);

// Sturm chain of a squarefree-or-not polynomial: p, p', -rem(...), ...
std::vector<QPoly> sturm_sequence(const QPoly& p);
// Distinct real roots in the open interval (a, b).
std::size_t count_roots_open(const QPoly& p, const Rational& a,
                             const Rational& b);

std::string to_string(const QPoly& p, const std::string& var = "t");

// Dense polynomial over F_p.
class FpPoly {
 public:
  explicit FpPoly(std::uint64_t prime) : prime_(prime) {}
  FpPoly(std::uint64_t prime, std::vector<std::uint64_t> coefficients);

  std::uint64_t prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<std::uint64_t>& coefficients() const noexcept {
    return coeffs_;
  }
  std::uint64_t coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  FpPoly monic() const;
  // Divides out the largest power of t.
  FpPoly strip_t() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();
  std::uint64_t prime_;
  std::vector<std::uint64_t> coeffs_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);

std::string to_string(const FpPoly& p, const std::string& var = "t");

// Laurent polynomial over F_p: exponent -> nonzero coefficient.
class LaurentPolyFp {
 public:
  explicit LaurentPolyFp(std::uint64_t prime) : prime_(prime) {}

  std::uint64_t prime() const noexcept { return prime_; }
  const std::map<std::int64_t, std::uint64_t>& terms() const noexcept {
    return terms_;
  }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(std::int64_t exponent, std::int64_t coefficient);

  // Multiplied by t^shift it becomes an ordinary polynomial; returns it.
  FpPoly to_poly(std::int64_t shift) const;
  std::int64_t min_exponent() const;

  static LaurentPolyFp from_poly(const FpPoly& p);

  friend bool operator==(const LaurentPolyFp&, const LaurentPolyFp&) = default;

 private:
  std::uint64_t prime_;
  std::map<std::int64_t, std::uint64_t> terms_;
};

std::string to_string(const LaurentPolyFp& p, const std::string& var = "t");

}  // namespace pdef
