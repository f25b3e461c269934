#include "pdef/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "parser.hpp"
#include "pdef/error.hpp"

namespace pdef {

namespace {

void append_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

// Prefix function of s: pi[i] is the length of the longest proper border of
// s[0..i].
std::vector<std::size_t> prefix_function(std::span<const Letter> s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

}  // namespace

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) append_reduced(letters_, l);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::generator(std::uint32_t index, int sign) {
  Word w;
  w.letters_.push_back(Letter{index, static_cast<std::int8_t>(sign < 0 ? -1 : 1)});
  return w;
}

std::uint32_t Word::span_rank() const noexcept {
  std::uint32_t r = 0;
  for (const Letter& l : letters_) r = std::max(r, l.gen + 1);
  return r;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(it->inverse());
  }
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || is_identity()) return Word{};
  const Word base = n < 0 ? inverse() : *this;
  const std::uint64_t count = static_cast<std::uint64_t>(n < 0 ? -n : n);
  // Peel to a cyclically reduced core so the power is a plain repetition.
  auto [u, core] = cyclic_reduce(base);
  std::vector<Letter> letters;
  letters.reserve(u.length() * 2 + core.length() * count);
  letters.insert(letters.end(), u.begin(), u.end());
  for (std::uint64_t i = 0; i < count; ++i) {
    letters.insert(letters.end(), core.begin(), core.end());
  }
  Word ui = u.inverse();
  letters.insert(letters.end(), ui.begin(), ui.end());
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

std::int64_t Word::exponent_sum(std::uint32_t g) const noexcept {
  std::int64_t s = 0;
  for (const Letter& l : letters_) {
    if (l.gen == g) s += l.sign;
  }
  return s;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const Letter& l : w) {
    h ^= l.key();
    h *= 1099511628211ULL;
  }
  return h;
}

Word reduce(std::span<const Letter> letters, std::size_t rank) {
  for (const Letter& l : letters) {
    if (l.gen >= rank || (l.sign != 1 && l.sign != -1)) {
      throw Error(ErrorCode::InvalidGeneratorIndex,
                  "generator index " + std::to_string(l.gen) +
                      " outside alphabet of size " + std::to_string(rank));
    }
  }
  return Word(letters);
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> letters(u.begin(), u.end());
  for (const Letter& l : v) append_reduced(letters, l);
  return Word(letters);
}

Word invert(const Word& w) { return w.inverse(); }

Word conjugate(const Word& u, const Word& w) {
  return multiply(multiply(u, w), u.inverse());
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(u.inverse(), v.inverse()));
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.conjugator = Word(letters.subspan(0, lo));
  out.core = Word(letters.subspan(lo, hi - lo));
  return out;
}

PrimitiveDecomposition primitive_decomposition(const Word& w) {
  if (w.is_identity()) {
    throw Error(ErrorCode::IdentityWord,
                "primitive decomposition of the identity");
  }
  auto [u, core] = cyclic_reduce(w);
  const std::size_t n = core.length();
  auto pi = prefix_function(core.letters());
  std::size_t period = n - pi[n - 1];
  if (n % period != 0) period = n;
  PrimitiveDecomposition out;
  out.root = conjugate(u, Word(core.letters().subspan(0, period)));
  out.multiplicity = n / period;
  return out;
}

unsigned nu_p(const Word& w, std::uint64_t p) {
  std::uint64_t m = primitive_decomposition(w).multiplicity;
  unsigned k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

bool are_conjugate(const Word& u, const Word& v) {
  const Word a = cyclic_reduce(u).core;
  const Word b = cyclic_reduce(v).core;
  if (a.length() != b.length()) return false;
  if (a.is_identity()) return true;
  // b is a rotation of a iff b occurs in a·a.
  std::vector<Letter> pattern(b.begin(), b.end());
  std::vector<Letter> text(a.begin(), a.end());
  text.insert(text.end(), a.begin(), a.end());
  return std::search(text.begin(), text.end(), pattern.begin(),
                     pattern.end()) != text.end();
}

std::vector<Word> enumerate_words(std::size_t rank, std::size_t max_length) {
  std::vector<Word> out;
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next_layer;
    for (const auto& prefix : layer) {
      for (std::uint32_t g = 0; g < rank; ++g) {
        for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
          Letter l{g, s};
          if (!prefix.empty() && prefix.back().cancels(l)) continue;
          auto w = prefix;
          w.push_back(l);
          next_layer.push_back(std::move(w));
        }
      }
    }
    for (const auto& w : next_layer) out.emplace_back(std::span<const Letter>(w));
    layer = std::move(next_layer);
  }
  return out;
}

std::uint64_t count_reduced_words(std::size_t rank, std::size_t length) {
  if (length == 0) return 1;
  std::uint64_t c = 2 * rank;
  for (std::size_t i = 1; i < length; ++i) c *= 2 * rank - 1;
  return c;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || std::isalpha(static_cast<unsigned char>(name[0])) == 0) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_generator_name(names_[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "invalid generator name '" + names_[i] + "'");
    }
    if (!lookup_.emplace(names_[i], static_cast<std::uint32_t>(i)).second) {
      throw Error(ErrorCode::DuplicateGenerator,
                  "duplicate generator '" + names_[i] + "'");
    }
  }
}

std::uint32_t Alphabet::index(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) {
    throw Error(ErrorCode::UnknownGenerator,
                "unknown generator '" + std::string(name) + "'");
  }
  return it->second;
}

bool Alphabet::contains(std::string_view name) const {
  return lookup_.count(std::string(name)) != 0;
}

Word Alphabet::word(std::span<const Letter> letters) const {
  return reduce(letters, size());
}

void Alphabet::check(const Word& w) const {
  if (w.span_rank() > size()) {
    throw Error(ErrorCode::AlphabetMismatch,
                "word uses generator " + std::to_string(w.span_rank() - 1) +
                    " outside alphabet of size " + std::to_string(size()));
  }
}

Word Alphabet::multiply(const Word& u, const Word& v) const {
  check(u);
  check(v);
  return pdef::multiply(u, v);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.is_identity()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w[j] == w[i]) ++j;
    const std::int64_t e = static_cast<std::int64_t>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet.name(w[i].gen);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  detail::Parser parser(text);
  Word w = parser.parse_word(alphabet);
  if (parser.peek().kind != detail::TokenKind::End) {
    parser.fail(parser.peek(), "unexpected '" + parser.peek().text + "'");
  }
  return w;
}

}  // namespace pdef
