#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdef/rational.hpp"
#include "pdef/words.hpp"

namespace pdef {

// A relator with its primitive decomposition cached at construction, so
// nu_p is available for every prime without re-scanning the word.
class RelatorEntry {
 public:
  // Throws IdentityRelator for the empty word.
  explicit RelatorEntry(Word word);

  const Word& word() const noexcept { return word_; }
  const Word& primitive_root() const noexcept { return root_; }
  std::uint64_t multiplicity() const noexcept { return multiplicity_; }

  unsigned nu_p(std::uint64_t p) const;
  // The p^nu_p-th root of the relator.
  Word p_power_root(std::uint64_t p) const;

  friend bool operator==(const RelatorEntry& a, const RelatorEntry& b) {
    return a.word_ == b.word_;
  }

 private:
  Word word_;
  Word root_;
  std::uint64_t multiplicity_ = 1;
};

// Declared bound on sum p^-nu_p(r) over the unlisted relators of an
// infinite presentation.
struct TailBudget {
  std::uint64_t prime = 2;
  Rational sigma = 0;
  // All tail relators are proper p-th powers, so they vanish mod p.
  bool p_powers_only = false;

  friend bool operator==(const TailBudget&, const TailBudget&) = default;
};

class Presentation {
 public:
  Presentation() = default;
  // Throws InvalidArgument for an empty alphabet, AlphabetMismatch for
  // relators using letters outside it, IdentityRelator for identity
  // relators.
  Presentation(Alphabet alphabet, std::vector<Word> relators,
               std::optional<TailBudget> tail = std::nullopt);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }
  const std::vector<RelatorEntry>& relators() const noexcept {
    return relators_;
  }
  const std::optional<TailBudget>& tail() const noexcept { return tail_; }
  bool is_finite() const noexcept { return !tail_.has_value(); }

  Presentation with_tail(std::optional<TailBudget> tail) const;

  // Total number of letters over all listed relators.
  std::size_t total_length() const noexcept;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.alphabet_ == b.alphabet_ && a.relators_ == b.relators_ &&
           a.tail_ == b.tail_;
  }

 private:
  Alphabet alphabet_;
  std::vector<RelatorEntry> relators_;
  std::optional<TailBudget> tail_;
};

// `< x, y | x^2, [x,y] >`. Lines starting with '#' are comments.
Presentation parse_presentation(std::string_view text);
// Canonical text; parse_presentation(format_presentation(P)) == P for
// finite presentations.
std::string format_presentation(const Presentation& p);

ExtendedRational deficiency(const Presentation& p);
// d - sum p^-nu_p(r) - tail sigma. With a tail this is a lower bound.
ExtendedRational p_deficiency(const Presentation& p, std::uint64_t prime);

// Dense matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::uint64_t prime, std::size_t rows, std::size_t cols);

  std::uint64_t prime() const noexcept { return prime_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint64_t& at(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::uint64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(const std::vector<std::uint64_t>& row);

  // Reduced row echelon form with the lowest available column pivoted
  // first. Returns the pivot columns.
  std::vector<std::size_t> reduce_to_echelon();

  std::size_t rank() const;
  // Basis of {v : M v = 0}, one vector per free column in ascending order.
  std::vector<std::vector<std::uint64_t>> nullspace() const;

 private:
  std::uint64_t prime_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t p);

// Row i is the exponent-sum vector of relator i mod p. Tail relators are
// not represented.
FpMatrix relation_matrix_mod_p(const Presentation& p, std::uint64_t prime);

// d_p = d - rank_Fp(relation matrix). Throws TailNotPPower when a tail may
// contribute rows.
std::size_t p_rank(const Presentation& p, std::uint64_t prime);

// Homomorphism onto C_p given by its values on the generators.
struct CpHom {
  std::uint64_t prime = 2;
  std::vector<std::uint64_t> values;

  bool is_zero() const noexcept;
  std::uint64_t operator()(const Word& w) const;

  friend bool operator==(const CpHom&, const CpHom&) = default;
};

// Basis of Hom(G, C_p) of size d_p.
std::vector<CpHom> hom_to_Cp_basis(const Presentation& p, std::uint64_t prime);

// True when theta kills every listed relator.
bool annihilates(const CpHom& theta, const Presentation& p);

struct GeneratorQuotient {
  Presentation presentation;
  // No relators survive.
  bool visibly_free = false;
  std::size_t dropped_relators = 0;
};

// Deletes the killed generators from every relator, reduces, and drops
// relators that become trivial.
GeneratorQuotient quotient_by_generators(const Presentation& p,
                                         const std::vector<std::string>& kill);

struct TorsionEntry {
  Word word;
  unsigned exponent = 1;  // relator is word^(p^exponent)
};

struct TorsionSchedule {
  std::size_t rank = 2;
  std::uint64_t prime = 2;
  Rational slack;
  std::vector<TorsionEntry> entries;
  TailBudget tail;
  Presentation presentation;
};

// First `count` relators w_i^(p^N_i) over the fixed enumeration of the free
// group, with p^-N_i <= (d-1-slack)/2^i. The remaining relators are summarised
// by the emitted tail budget.
TorsionSchedule torsion_schedule(std::size_t rank, std::uint64_t prime,
                                 const Rational& slack, std::size_t count);

struct PresentationAnalysis {
  std::uint64_t prime = 2;
  ExtendedRational def;
  ExtendedRational def_p;
  bool def_p_is_lower_bound = false;
  // Exact when available, otherwise ceil(def_p) from d_p >= def_p.
  Integer d_p = 0;
  bool d_p_is_lower_bound = false;
  bool is_puchta = false;
  bool p_large_obstruction = false;
  bool infinite_certificate = false;
  std::optional<Rational> tail_sigma;
};

PresentationAnalysis analyze(const Presentation& p, std::uint64_t prime);

}  // namespace pdef
