#include "pdef/rational.hpp"

#include <cctype>
#include <string>

#include "pdef/error.hpp"

namespace pdef {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto valid_integer = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw Error(ErrorCode::InvalidArgument,
                "not a rational number: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  }
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  result.canonicalize();
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Integer ceil(const Rational& q) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

const Rational& ExtendedRational::value() const {
  if (!value_) {
    throw Error(ErrorCode::InvalidArgument, "value of -inf requested");
  }
  return *value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  return a.value_ == b.value_;
}

std::string to_string(const ExtendedRational& q) {
  return q.is_negative_infinity() ? "-inf" : to_string(q.value());
}

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace pdef
