#include "pdef/polynomial.hpp"

#include <algorithm>

#include "pdef/error.hpp"
#include "pdef/presentation.hpp"

namespace pdef {

QPoly::QPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational QPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

int QPoly::sign_at(const Rational& t) const { return sgn((*this)(t)); }

QPoly QPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  }
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> out = coeffs_;
  const Rational lead = leading();
  for (auto& c : out) c /= lead;
  return QPoly(std::move(out));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  std::vector<Rational> rem = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1),
                             Rational(0));
  for (long i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / b.leading();
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -=
          c * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  QPoly d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d);
    QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    d = -r;
  }
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<QPoly>& seq, const Rational& t) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

QPoly remove_root(QPoly p, const Rational& r) {
  const QPoly factor(std::vector<Rational>{-r, Rational(1)});
  while (!p.is_zero() && p(r) == 0) p = divmod(p, factor).first;
  return p;
}

}  // namespace

std::size_t count_roots_open(const QPoly& p, const Rational& a,
                             const Rational& b) {
  if (p.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "zero polynomial has every root");
  }
  if (!(a < b)) return 0;
  const QPoly q = remove_root(remove_root(p, a), b);
  if (q.degree() < 1) return 0;
  const auto seq = sturm_sequence(q);
  const std::size_t va = sign_changes(seq, a);
  const std::size_t vb = sign_changes(seq, b);
  return va > vb ? va - vb : 0;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    Rational c = p.coefficients()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (i == 1) power = var;
    if (i > 1) power = var + "^" + std::to_string(i);
    if (i == 0 || c != 1) {
      const std::string cs = c.get_str();
      if (i > 0 && c.get_den() != 1) {
        out += "(" + cs + ")";
      } else {
        out += cs;
      }
    }
    out += power;
  }
  return out;
}

FpPoly::FpPoly(std::uint64_t prime, std::vector<std::uint64_t> coefficients)
    : prime_(prime), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c %= prime_;
  trim();
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = mod_inverse(coeffs_.back(), prime_);
  std::vector<std::uint64_t> out = coeffs_;
  for (auto& c : out) c = c * inv % prime_;
  return FpPoly(prime_, std::move(out));
}

FpPoly FpPoly::strip_t() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return FpPoly(prime_, std::vector<std::uint64_t>(coeffs_.begin() + static_cast<long>(k),
                                                   coeffs_.end()));
}

namespace {

void same_prime(const FpPoly& a, const FpPoly& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorCode::InvalidArgument, "polynomials over different primes");
  }
}

}  // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  same_prime(a, b);
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coefficient(i) + b.coefficient(i)) % a.prime_;
  }
  return FpPoly(a.prime_, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  same_prime(a, b);
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coefficient(i) + a.prime_ - b.coefficient(i)) % a.prime_;
  }
  return FpPoly(a.prime_, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  same_prime(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.prime_);
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = (out[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.prime_;
    }
  }
  return FpPoly(a.prime_, std::move(out));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  same_prime(a, b);
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  const std::uint64_t p = a.prime();
  std::vector<std::uint64_t> rem = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {FpPoly(p), a};
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const std::uint64_t inv = mod_inverse(b.coefficients().back(), p);
  for (long i = a.degree(); i >= db; --i) {
    const std::uint64_t c = rem[static_cast<std::size_t>(i)] * inv % p;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - c * b.coefficients()[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  same_prime(a, b);
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string to_string(const FpPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const std::uint64_t c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

void LaurentPolyFp::add_term(std::int64_t exponent, std::int64_t coefficient) {
  const std::uint64_t c = mod_reduce(coefficient, prime_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = (it->second + c) % prime_;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPolyFp::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

FpPoly LaurentPolyFp::to_poly(std::int64_t shift) const {
  if (terms_.empty()) return FpPoly(prime_);
  if (min_exponent() + shift < 0) {
    throw Error(ErrorCode::InvalidArgument, "shift leaves negative exponents");
  }
  std::vector<std::uint64_t> coeffs(
      static_cast<std::size_t>(terms_.rbegin()->first + shift + 1), 0);
  for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e + shift)] = c;
  return FpPoly(prime_, std::move(coeffs));
}

LaurentPolyFp LaurentPolyFp::from_poly(const FpPoly& p) {
  LaurentPolyFp out(p.prime());
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    out.add_term(static_cast<std::int64_t>(i),
                 static_cast<std::int64_t>(p.coefficients()[i]));
  }
  return out;
}

std::string to_string(const LaurentPolyFp& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [e, c] = *it;
    if (!out.empty()) out += " + ";
    if (c != 1 || e == 0) out += std::to_string(c);
    if (e != 0) out += var;
    if (e != 0 && e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace pdef
