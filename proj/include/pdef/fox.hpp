#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pdef/polynomial.hpp"
#include "pdef/presentation.hpp"

namespace pdef {

// Element of the integral group ring of the free group.
using GroupRingElement = std::map<Word, std::int64_t>;

// Fox derivative d w / d x_g.
GroupRingElement fox_derivative(const Word& w, std::uint32_t g);

std::int64_t augmentation(const GroupRingElement& e);

// Homomorphism onto Z given by its generator values.
struct ZHom {
  std::vector<std::int64_t> values;

  bool is_zero() const noexcept;
  std::int64_t operator()(const Word& w) const;
};

using AlexanderMatrix = std::vector<std::vector<LaurentPolyFp>>;

// Entry (i, j) is d r_i / d x_j under g -> t^chi(g), reduced mod p. Throws
// ChiZero, ChiNotAnnihilating.
AlexanderMatrix alexander_matrix_mod_p(const Presentation& p, const ZHom& chi,
                                       std::uint64_t prime);

struct AlexanderPolynomial {
  // Normalized: nonzero constant term, leading coefficient 1. Zero when all
  // minors vanish.
  FpPoly delta;
  // delta == 0: the largeness criterion applies.
  bool vanishes = false;
};

// gcd of the (d-1)x(d-1) minors of the Alexander matrix.
AlexanderPolynomial alexander_poly_mod_p(const Presentation& p,
                                         const ZHom& chi, std::uint64_t prime);

// Determinant over F_p[t] (fraction-free elimination).
FpPoly determinant(std::vector<std::vector<FpPoly>> m, std::uint64_t prime);

}  // namespace pdef
