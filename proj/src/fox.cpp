#include "pdef/fox.hpp"

#include <numeric>

#include "pdef/error.hpp"

namespace pdef {

GroupRingElement fox_derivative(const Word& w, std::uint32_t g) {
  GroupRingElement out;
  std::vector<Letter> prefix;
  auto add = [&](std::int64_t c) {
    Word key(prefix);
    auto& slot = out[key];
    slot += c;
    if (slot == 0) out.erase(key);
  };
  for (const Letter& l : w) {
    if (l.gen == g && l.sign > 0) add(1);
    prefix.push_back(l);
    if (l.gen == g && l.sign < 0) add(-1);
  }
  return out;
}

std::int64_t augmentation(const GroupRingElement& e) {
  std::int64_t total = 0;
  for (const auto& [word, c] : e) total += c;
  return total;
}

bool ZHom::is_zero() const noexcept {
  for (auto v : values) {
    if (v != 0) return false;
  }
  return true;
}

std::int64_t ZHom::operator()(const Word& w) const {
  std::int64_t total = 0;
  for (const Letter& l : w) total += l.sign * values.at(l.gen);
  return total;
}

namespace {

void check_chi(const Presentation& p, const ZHom& chi) {
  if (!p.is_finite()) {
    throw Error(ErrorCode::InfinitePresentation, "needs a finite presentation");
  }
  if (chi.values.size() != p.rank()) {
    throw Error(ErrorCode::InvalidArgument, "chi needs one value per generator");
  }
  if (chi.is_zero()) throw Error(ErrorCode::ChiZero, "chi is zero");
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (chi(p.relators()[i].word()) != 0) {
      throw Error(ErrorCode::ChiNotAnnihilating,
                  "chi does not kill relator " + std::to_string(i + 1));
    }
  }
}

FpPoly negate(const FpPoly& a) { return FpPoly(a.prime()) - a; }

}  // namespace

AlexanderMatrix alexander_matrix_mod_p(const Presentation& p, const ZHom& chi,
                                       std::uint64_t prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime");
  }
  check_chi(p, chi);
  AlexanderMatrix m;
  for (const auto& r : p.relators()) {
    std::vector<LaurentPolyFp> row;
    for (std::uint32_t g = 0; g < p.rank(); ++g) {
      LaurentPolyFp entry(prime);
      for (const auto& [word, c] : fox_derivative(r.word(), g)) {
        entry.add_term(chi(word), c);
      }
      row.push_back(std::move(entry));
    }
    m.push_back(std::move(row));
  }
  return m;
}

FpPoly determinant(std::vector<std::vector<FpPoly>> m, std::uint64_t prime) {
  const std::size_t n = m.size();
  if (n == 0) return FpPoly(prime, {1});
  bool negative = false;
  FpPoly prev(prime, {1});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return FpPoly(prime);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divmod(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev).first;
      }
    }
    prev = m[k][k];
  }
  return negative ? negate(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

AlexanderPolynomial alexander_poly_mod_p(const Presentation& p,
                                         const ZHom& chi, std::uint64_t prime) {
  const AlexanderMatrix lm = alexander_matrix_mod_p(p, chi, prime);
  const std::size_t d = p.rank();
  const std::size_t size = d - 1;
  AlexanderPolynomial out{FpPoly(prime), false};
  if (size == 0) {
    out.delta = FpPoly(prime, {1});
    return out;
  }
  if (lm.size() < size) {
    out.vanishes = true;
    return out;
  }

  std::int64_t shift = 0;
  for (const auto& row : lm) {
    for (const auto& e : row) {
      if (!e.is_zero()) shift = std::max(shift, -e.min_exponent());
    }
  }
  std::vector<std::vector<FpPoly>> m;
  for (const auto& row : lm) {
    std::vector<FpPoly> r;
    for (const auto& e : row) r.push_back(e.to_poly(shift));
    m.push_back(std::move(r));
  }

  FpPoly g(prime);
  std::vector<std::size_t> rows(size);
  std::iota(rows.begin(), rows.end(), 0);
  while (true) {
    for (std::size_t skip = 0; skip < d; ++skip) {
      std::vector<std::vector<FpPoly>> minor;
      for (auto r : rows) {
        std::vector<FpPoly> line;
        for (std::size_t c = 0; c < d; ++c) {
          if (c != skip) line.push_back(m[r][c]);
        }
        minor.push_back(std::move(line));
      }
      g = gcd(g, determinant(std::move(minor), prime));
    }
    // Next combination of `size` rows out of m.size().
    std::size_t i = size;
    while (i > 0 && rows[i - 1] == m.size() - size + i - 1) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < size; ++j) rows[j] = rows[j - 1] + 1;
  }
  out.vanishes = g.is_zero();
  if (!out.vanishes) out.delta = g.strip_t().monic();
  return out;
}

}  // namespace pdef
