#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pdef {

// A generator or its inverse. Letters order by (generator, sign) with the
// positive letter first, which fixes the enumeration order of words.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const noexcept {
    return Letter{gen, static_cast<std::int8_t>(-sign)};
  }
  constexpr bool cancels(const Letter& other) const noexcept {
    return gen == other.gen && sign == -other.sign;
  }
  constexpr std::uint32_t key() const noexcept {
    return 2 * gen + (sign < 0 ? 1 : 0);
  }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr std::strong_ordering operator<=>(const Letter& a,
                                                    const Letter& b) {
    return a.key() <=> b.key();
  }
};

constexpr Letter gen(std::uint32_t index) { return Letter{index, 1}; }
constexpr Letter inv(std::uint32_t index) { return Letter{index, -1}; }

// Freely reduced word in a free group. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Freely reduces `letters`.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(std::uint32_t index, int sign = 1);

  bool is_identity() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Largest generator index used plus one (0 for the identity).
  std::uint32_t span_rank() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t n) const;

  // Signed exponent sum of generator `g`.
  std::int64_t exponent_sum(std::uint32_t g) const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Free reduction with index validation against an alphabet of size `rank`.
Word reduce(std::span<const Letter> letters, std::size_t rank);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
// u w u^-1
Word conjugate(const Word& u, const Word& w);
// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

struct CyclicReduction {
  Word conjugator;
  Word core;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

struct PrimitiveDecomposition {
  Word root;
  std::uint64_t multiplicity = 1;
};

// w = root^multiplicity with root not a proper power. Throws IdentityWord.
PrimitiveDecomposition primitive_decomposition(const Word& w);

// Largest k with w a p^k-th power in the free group. Throws IdentityWord.
unsigned nu_p(const Word& w, std::uint64_t p);

// True when u is conjugate to v in the free group.
bool are_conjugate(const Word& u, const Word& v);

// All nonidentity reduced words of length <= max_length over `rank`
// generators, ordered by length then lexicographically by letter.
std::vector<Word> enumerate_words(std::size_t rank, std::size_t max_length);

// Number of reduced words of length exactly `length` over `rank` generators.
std::uint64_t count_reduced_words(std::size_t rank, std::size_t length);

// Named generators. Names are distinct and match [A-Za-z][A-Za-z0-9_]*.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  // Throws UnknownGenerator.
  std::uint32_t index(std::string_view name) const;
  bool contains(std::string_view name) const;

  // Validates indices and reduces.
  Word word(std::span<const Letter> letters) const;
  // Throws AlphabetMismatch when either operand uses letters outside this
  // alphabet.
  Word multiply(const Word& u, const Word& v) const;
  void check(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> lookup_;
};

bool is_valid_generator_name(std::string_view name);

// Canonical text: runs of one letter collapse to powers, factors separated
// by single spaces, e.g. "x^2 y^-1 x". The identity formats as "1".
std::string format_word(const Word& w, const Alphabet& alphabet);

// Parses the word grammar shared with presentation files: juxtaposition or
// '*', '^' with signed integer exponents, parentheses and [u,v].
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace pdef
