#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/words.hpp"

namespace pdef {

using Monomial = std::vector<std::uint32_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct SeriesLimits {
  std::size_t max_terms = 1'000'000;
};

// Element of F_p<<X>> modulo monomials of length > bound. The constant
// term is kept apart from the sparse map of higher terms.
class TruncatedNCSeries {
 public:
  TruncatedNCSeries(std::uint64_t prime, std::size_t bound,
                    std::uint64_t constant = 1);

  std::uint64_t prime() const noexcept { return prime_; }
  std::size_t bound() const noexcept { return bound_; }
  std::uint64_t constant() const noexcept { return constant_; }
  const std::unordered_map<Monomial, std::uint64_t, MonomialHash>& terms()
      const noexcept {
    return terms_;
  }
  std::size_t term_count() const noexcept { return terms_.size(); }

  std::uint64_t coefficient(const Monomial& m) const;

  // Right multiplication by the image of one letter: x -> 1 + X and
  // x^-1 -> 1 - X + X^2 - ... truncated.
  void multiply_letter(const Letter& letter, const SeriesLimits& limits = {});

  // Smallest length of a nonzero non-constant term, if any.
  std::optional<std::size_t> lowest_degree() const;

  friend TruncatedNCSeries operator*(const TruncatedNCSeries& a,
                                     const TruncatedNCSeries& b);
  friend bool operator==(const TruncatedNCSeries& a,
                         const TruncatedNCSeries& b);

 private:
  void add(const Monomial& m, std::uint64_t c);

  std::uint64_t prime_;
  std::size_t bound_;
  std::uint64_t constant_;
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> terms_;
};

TruncatedNCSeries magnus_embed(const Word& w, std::uint64_t p,
                               std::size_t bound,
                               const SeriesLimits& limits = {});

// Exact(d) or AtLeast(d).
struct DegreeResult {
  std::uint64_t value = 1;
  bool exact = true;

  static DegreeResult Exact(std::uint64_t d) { return {d, true}; }
  static DegreeResult AtLeast(std::uint64_t d) { return {d, false}; }

  friend bool operator==(const DegreeResult&, const DegreeResult&) = default;
};

std::string to_string(const DegreeResult& d);

// Degree of w in the Zassenhaus p-filtration of the free group, read off the
// Magnus expansion: lowest surviving degree of mu(w) - 1. Expansion is
// deepened 1, 2, 4, ... up to `bound`. Throws IdentityWord, ResourceLimit.
DegreeResult zassenhaus_degree(const Word& w, std::uint64_t p,
                               std::size_t bound,
                               const SeriesLimits& limits = {});

// For r = w^(p^k), k = nu_p(r): deg(r) = p^k deg(w). Only the root is
// expanded, at bound ceil(bound / p^k). The exact result may exceed `bound`.
DegreeResult relator_degree(const RelatorEntry& r, std::uint64_t p,
                            std::size_t bound,
                            const SeriesLimits& limits = {});

}  // namespace pdef
