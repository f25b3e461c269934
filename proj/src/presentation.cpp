#include "pdef/presentation.hpp"

#include <algorithm>
#include <set>

#include "parser.hpp"
#include "pdef/error.hpp"

namespace pdef {

RelatorEntry::RelatorEntry(Word word) : word_(std::move(word)) {
  if (word_.is_identity()) {
    throw Error(ErrorCode::IdentityRelator, "identity relator");
  }
  auto d = primitive_decomposition(word_);
  root_ = std::move(d.root);
  multiplicity_ = d.multiplicity;
}

unsigned RelatorEntry::nu_p(std::uint64_t p) const {
  return valuation(multiplicity_, p);
}

Word RelatorEntry::p_power_root(std::uint64_t p) const {
  std::uint64_t m = multiplicity_;
  while (m % p == 0) m /= p;
  return root_.pow(static_cast<std::int64_t>(m));
}

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators,
                           std::optional<TailBudget> tail)
    : alphabet_(std::move(alphabet)), tail_(std::move(tail)) {
  if (alphabet_.size() == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "a presentation needs at least one generator");
  }
  if (tail_ && tail_->sigma < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative tail budget");
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    alphabet_.check(r);
    relators_.emplace_back(std::move(r));
  }
}

Presentation Presentation::with_tail(std::optional<TailBudget> tail) const {
  Presentation p = *this;
  if (tail && tail->sigma < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative tail budget");
  }
  p.tail_ = std::move(tail);
  return p;
}

std::size_t Presentation::total_length() const noexcept {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.word().length();
  return n;
}

Presentation parse_presentation(std::string_view text) {
  using detail::TokenKind;
  detail::Parser parser(text);
  parser.expect(TokenKind::LAngle, "'<'");
  std::vector<std::string> names;
  std::set<std::string> seen;
  while (true) {
    detail::Token tok = parser.expect(TokenKind::Name, "generator name");
    if (!seen.insert(tok.text).second) {
      throw Error(ErrorCode::DuplicateGenerator,
                  std::to_string(tok.line) + ":" + std::to_string(tok.column) +
                      ": duplicate generator '" + tok.text + "'");
    }
    names.push_back(tok.text);
    if (parser.peek().kind != TokenKind::Comma) break;
    parser.next();
  }
  Alphabet alphabet(std::move(names));
  parser.expect(TokenKind::Bar, "'|'");
  std::vector<Word> relators;
  if (parser.peek().kind != TokenKind::RAngle) {
    while (true) {
      detail::Token start = parser.peek();
      Word w = parser.parse_word(alphabet);
      if (w.is_identity()) {
        throw Error(ErrorCode::IdentityRelator,
                    std::to_string(start.line) + ":" +
                        std::to_string(start.column) +
                        ": relator reduces to the identity");
      }
      relators.push_back(std::move(w));
      if (parser.peek().kind != TokenKind::Comma) break;
      parser.next();
    }
  }
  parser.expect(TokenKind::RAngle, "'>'");
  if (parser.peek().kind != TokenKind::End) {
    parser.fail(parser.peek(), "trailing input after '>'");
  }
  return Presentation(std::move(alphabet), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.rank(); ++i) {
    if (i != 0) out += ", ";
    out += p.alphabet().name(i);
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i == 0 ? " " : ", ";
    const RelatorEntry& r = p.relators()[i];
    if (r.multiplicity() > 1 && r.primitive_root().length() > 1 &&
        r.primitive_root().pow(static_cast<std::int64_t>(r.multiplicity())) ==
            r.word()) {
      out += "(" + format_word(r.primitive_root(), p.alphabet()) + ")^" +
             std::to_string(r.multiplicity());
    } else {
      out += format_word(r.word(), p.alphabet());
    }
  }
  out += " >";
  return out;
}

ExtendedRational deficiency(const Presentation& p) {
  if (!p.is_finite()) return ExtendedRational::negative_infinity();
  return Rational(static_cast<long>(p.rank()) -
                  static_cast<long>(p.relators().size()));
}

ExtendedRational p_deficiency(const Presentation& p, std::uint64_t prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(prime) + " is not prime");
  }
  if (p.tail() && p.tail()->prime != prime) {
    return ExtendedRational::negative_infinity();
  }
  Rational result(static_cast<long>(p.rank()));
  for (const auto& r : p.relators()) {
    result -= Rational(1, pow(Integer(prime), r.nu_p(prime)));
  }
  if (p.tail()) result -= p.tail()->sigma;
  return result;
}

std::uint64_t mod_reduce(std::int64_t a, std::uint64_t p) {
  std::int64_t m = a % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(result) * base) % p);
    base = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(base) * base) % p);
    e >>= 1U;
  }
  return result;
}

FpMatrix::FpMatrix(std::uint64_t prime, std::size_t rows, std::size_t cols)
    : prime_(prime), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void FpMatrix::append_row(const std::vector<std::uint64_t>& row) {
  if (row.size() != cols_) {
    throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  }
  for (auto v : row) data_.push_back(v % prime_);
  ++rows_;
}

std::vector<std::size_t> FpMatrix::reduce_to_echelon() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(pivot, k), at(r, k));
    }
    const std::uint64_t scale = mod_inverse(at(r, c), prime_);
    for (std::size_t k = 0; k < cols_; ++k) at(r, k) = at(r, k) * scale % prime_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const std::uint64_t f = at(i, c);
      for (std::size_t k = 0; k < cols_; ++k) {
        at(i, k) = (at(i, k) + (prime_ - f) * at(r, k)) % prime_;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.reduce_to_echelon().size();
}

std::vector<std::vector<std::uint64_t>> FpMatrix::nullspace() const {
  FpMatrix m = *this;
  auto pivots = m.reduce_to_echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = (prime_ - m.at(r, free)) % prime_;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMatrix relation_matrix_mod_p(const Presentation& p, std::uint64_t prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(prime) + " is not prime");
  }
  FpMatrix m(prime, 0, p.rank());
  for (const auto& r : p.relators()) {
    std::vector<std::uint64_t> row(p.rank(), 0);
    for (std::uint32_t g = 0; g < p.rank(); ++g) {
      row[g] = mod_reduce(r.word().exponent_sum(g), prime);
    }
    m.append_row(row);
  }
  return m;
}

namespace {

void require_tail_vanishes(const Presentation& p, std::uint64_t prime) {
  if (p.tail() && !(p.tail()->p_powers_only && p.tail()->prime == prime)) {
    throw Error(ErrorCode::TailNotPPower,
                "tail relators are not declared to be proper " +
                    std::to_string(prime) +
                    "-th powers; the p-rank cannot be computed");
  }
}

}  // namespace

std::size_t p_rank(const Presentation& p, std::uint64_t prime) {
  require_tail_vanishes(p, prime);
  return p.rank() - relation_matrix_mod_p(p, prime).rank();
}

bool CpHom::is_zero() const noexcept {
  return std::all_of(values.begin(), values.end(),
                     [&](std::uint64_t v) { return v % prime == 0; });
}

std::uint64_t CpHom::operator()(const Word& w) const {
  std::int64_t total = 0;
  for (const Letter& l : w) {
    total = (total + l.sign * static_cast<std::int64_t>(values.at(l.gen))) %
            static_cast<std::int64_t>(prime);
  }
  return mod_reduce(total, prime);
}

std::vector<CpHom> hom_to_Cp_basis(const Presentation& p, std::uint64_t prime) {
  require_tail_vanishes(p, prime);
  std::vector<CpHom> out;
  for (auto& v : relation_matrix_mod_p(p, prime).nullspace()) {
    out.push_back(CpHom{prime, std::move(v)});
  }
  return out;
}

bool annihilates(const CpHom& theta, const Presentation& p) {
  if (theta.values.size() != p.rank()) return false;
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const RelatorEntry& r) { return theta(r.word()) == 0; });
}

GeneratorQuotient quotient_by_generators(const Presentation& p,
                                         const std::vector<std::string>& kill) {
  if (kill.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no generators to kill");
  }
  std::vector<bool> killed(p.rank(), false);
  for (const auto& name : kill) killed[p.alphabet().index(name)] = true;
  std::vector<std::string> names;
  std::vector<std::int64_t> remap(p.rank(), -1);
  for (std::uint32_t g = 0; g < p.rank(); ++g) {
    if (killed[g]) continue;
    remap[g] = static_cast<std::int64_t>(names.size());
    names.push_back(p.alphabet().name(g));
  }
  if (names.empty()) {
    throw Error(ErrorCode::KillsAllGenerators,
                "quotient would kill every generator");
  }
  GeneratorQuotient out;
  std::vector<Word> relators;
  for (const auto& r : p.relators()) {
    std::vector<Letter> letters;
    for (const Letter& l : r.word()) {
      if (remap[l.gen] >= 0) {
        letters.push_back(Letter{static_cast<std::uint32_t>(remap[l.gen]), l.sign});
      }
    }
    Word w(letters);
    if (w.is_identity()) {
      ++out.dropped_relators;
    } else {
      relators.push_back(std::move(w));
    }
  }
  out.visibly_free = relators.empty() && p.is_finite();
  out.presentation =
      Presentation(Alphabet(std::move(names)), std::move(relators), p.tail());
  return out;
}

TorsionSchedule torsion_schedule(std::size_t rank, std::uint64_t prime,
                                 const Rational& slack, std::size_t count) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(prime) + " is not prime");
  }
  if (rank < 2) {
    throw Error(ErrorCode::InvalidArgument, "torsion schedule needs d >= 2");
  }
  if (slack <= 0) {
    throw Error(ErrorCode::InvalidArgument, "slack must be positive");
  }
  const Rational budget = Rational(static_cast<long>(rank) - 1) - slack;
  if (budget <= 0) {
    throw Error(ErrorCode::SlackTooLarge,
                "slack " + to_string(slack) + " must be below d - 1");
  }
  std::size_t length = 1;
  std::size_t available = 0;
  while (available < count) {
    available += count_reduced_words(rank, length);
    if (available < count) ++length;
  }
  auto words = enumerate_words(rank, count == 0 ? 0 : length);

  TorsionSchedule out;
  out.rank = rank;
  out.prime = prime;
  out.slack = slack;
  std::vector<Word> relators;
  Rational share = budget;
  for (std::size_t i = 0; i < count; ++i) {
    share /= 2;
    // Least N >= 1 with p^-N <= share.
    unsigned n = 1;
    Integer power(prime);
    while (Rational(1, power) > share) {
      power *= prime;
      ++n;
    }
    out.entries.push_back(TorsionEntry{words[i], n});
    relators.push_back(words[i].pow(static_cast<std::int64_t>(
        pow(Integer(prime), n).get_ui())));
  }
  out.tail = TailBudget{prime, share, true};
  std::vector<std::string> names;
  for (std::size_t g = 0; g < rank; ++g) names.push_back("x" + std::to_string(g + 1));
  out.presentation = Presentation(Alphabet(std::move(names)),
                                  std::move(relators), out.tail);
  return out;
}

PresentationAnalysis analyze(const Presentation& p, std::uint64_t prime) {
  PresentationAnalysis a;
  a.prime = prime;
  a.def = deficiency(p);
  a.def_p = p_deficiency(p, prime);
  a.def_p_is_lower_bound = !p.is_finite();
  if (p.tail()) a.tail_sigma = p.tail()->sigma;
  const bool tail_vanishes =
      !p.tail() || (p.tail()->p_powers_only && p.tail()->prime == prime);
  if (tail_vanishes) {
    a.d_p = static_cast<unsigned long>(p_rank(p, prime));
  } else {
    a.d_p_is_lower_bound = true;
    a.d_p = a.def_p.is_finite() ? std::max(Integer(0), ceil(a.def_p.value()))
                                : Integer(0);
  }
  if (a.def_p.is_finite()) {
    a.is_puchta = a.def_p.value() > 1;
    a.infinite_certificate = a.def_p.value() >= 1;
  }
  a.p_large_obstruction = !a.d_p_is_lower_bound && a.d_p <= 1;
  return a;
}

}  // namespace pdef
