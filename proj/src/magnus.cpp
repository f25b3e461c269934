#include "pdef/magnus.hpp"

#include <algorithm>

#include "pdef/error.hpp"

namespace pdef {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (auto g : m) {
    h ^= g + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (m.size() << 1));
}

TruncatedNCSeries::TruncatedNCSeries(std::uint64_t prime, std::size_t bound,
                                     std::uint64_t constant)
    : prime_(prime), bound_(bound), constant_(constant % prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime");
  }
  if (bound == 0) {
    throw Error(ErrorCode::InvalidArgument, "truncation bound must be >= 1");
  }
}

std::uint64_t TruncatedNCSeries::coefficient(const Monomial& m) const {
  if (m.empty()) return constant_;
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TruncatedNCSeries::add(const Monomial& m, std::uint64_t c) {
  c %= prime_;
  if (c == 0) return;
  if (m.empty()) {
    constant_ = (constant_ + c) % prime_;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % prime_;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedNCSeries::multiply_letter(const Letter& letter,
                                        const SeriesLimits& limits) {
  const std::uint64_t minus_one = prime_ - 1;
  std::vector<std::pair<Monomial, std::uint64_t>> old(terms_.begin(),
                                                      terms_.end());
  old.emplace_back(Monomial{}, constant_);
  for (const auto& [m, c] : old) {
    if (c == 0) continue;
    Monomial next = m;
    std::uint64_t coeff = c;
    for (std::size_t len = m.size() + 1; len <= bound_; ++len) {
      next.push_back(letter.gen);
      if (letter.sign < 0) coeff = coeff * minus_one % prime_;
      add(next, coeff);
      if (letter.sign > 0) break;
    }
    if (terms_.size() > limits.max_terms) {
      throw Error(ErrorCode::ResourceLimit,
                  "Magnus expansion exceeded " +
                      std::to_string(limits.max_terms) + " terms");
    }
  }
}

std::optional<std::size_t> TruncatedNCSeries::lowest_degree() const {
  std::optional<std::size_t> best;
  for (const auto& [m, c] : terms_) {
    if (!best || m.size() < *best) best = m.size();
  }
  return best;
}

TruncatedNCSeries operator*(const TruncatedNCSeries& a,
                            const TruncatedNCSeries& b) {
  if (a.prime_ != b.prime_) {
    throw Error(ErrorCode::InvalidArgument, "series over different primes");
  }
  TruncatedNCSeries out(a.prime_, std::min(a.bound_, b.bound_), 0);
  std::vector<std::pair<Monomial, std::uint64_t>> left(a.terms_.begin(),
                                                       a.terms_.end());
  left.emplace_back(Monomial{}, a.constant_);
  std::vector<std::pair<Monomial, std::uint64_t>> right(b.terms_.begin(),
                                                        b.terms_.end());
  right.emplace_back(Monomial{}, b.constant_);
  for (const auto& [ml, cl] : left) {
    for (const auto& [mr, cr] : right) {
      if (ml.size() + mr.size() > out.bound_) continue;
      Monomial m = ml;
      m.insert(m.end(), mr.begin(), mr.end());
      out.add(m, cl * cr);
    }
  }
  return out;
}

bool operator==(const TruncatedNCSeries& a, const TruncatedNCSeries& b) {
  return a.prime_ == b.prime_ && a.bound_ == b.bound_ &&
         a.constant_ == b.constant_ && a.terms_ == b.terms_;
}

TruncatedNCSeries magnus_embed(const Word& w, std::uint64_t p,
                               std::size_t bound, const SeriesLimits& limits) {
  TruncatedNCSeries s(p, bound);
  for (const Letter& l : w) s.multiply_letter(l, limits);
  return s;
}

std::string to_string(const DegreeResult& d) {
  return (d.exact ? "" : ">=") + std::to_string(d.value);
}

DegreeResult zassenhaus_degree(const Word& w, std::uint64_t p,
                               std::size_t bound, const SeriesLimits& limits) {
  if (w.is_identity()) {
    throw Error(ErrorCode::IdentityWord, "degree of the identity is undefined");
  }
  if (bound == 0) {
    throw Error(ErrorCode::InvalidArgument, "degree bound must be >= 1");
  }
  // Conjugation does not change the degree.
  const Word core = cyclic_reduce(w).core;
  for (std::size_t b = 1;; b = std::min(2 * b, bound)) {
    auto low = magnus_embed(core, p, b, limits).lowest_degree();
    if (low) return DegreeResult::Exact(*low);
    if (b == bound) return DegreeResult::AtLeast(bound + 1);
  }
}

DegreeResult relator_degree(const RelatorEntry& r, std::uint64_t p,
                            std::size_t bound, const SeriesLimits& limits) {
  const unsigned k = r.nu_p(p);
  const std::uint64_t pk = pow(Integer(p), k).get_ui();
  const std::size_t root_bound =
      std::max<std::size_t>(1, (bound + pk - 1) / pk);
  const DegreeResult d = zassenhaus_degree(r.p_power_root(p), p, root_bound, limits);
  return d.exact ? DegreeResult::Exact(d.value * pk)
                 : DegreeResult::AtLeast(d.value * pk);
}

}  // namespace pdef
