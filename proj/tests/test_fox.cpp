#include "doctest.h"
#include "pdef/coxeter.hpp"
#include "pdef/error.hpp"
#include "pdef/fox.hpp"

using namespace pdef;

namespace {

const Alphabet xy({"x", "y"});
Word w(const char* text) { return parse_word(text, xy); }
Presentation P(const char* text) { return parse_presentation(text); }

// Sum of c * g over the ring element, then multiplied on the left by u.
GroupRingElement left_mul(const Word& u, const GroupRingElement& e) {
  GroupRingElement out;
  for (const auto& [g, c] : e) {
    auto& slot = out[multiply(u, g)];
    slot += c;
    if (slot == 0) out.erase(multiply(u, g));
  }
  return out;
}

GroupRingElement add(GroupRingElement a, const GroupRingElement& b) {
  for (const auto& [g, c] : b) {
    auto& slot = a[g];
    slot += c;
    if (slot == 0) a.erase(g);
  }
  return a;
}

FpPoly fp(std::uint64_t p, std::vector<std::uint64_t> c) { return FpPoly(p, c); }

}  // namespace

TEST_CASE("Fox derivatives") {
  CHECK(fox_derivative(w("x"), 0) == GroupRingElement{{Word(), 1}});
  CHECK(fox_derivative(w("x^-1"), 0) == GroupRingElement{{w("x^-1"), -1}});
  CHECK(fox_derivative(w("[x,y]"), 1) ==
        GroupRingElement{{w("x"), 1}, {w("[x,y]"), -1}});
  CHECK(fox_derivative(w("y"), 0).empty());
}

TEST_CASE("Fox derivative product rule and augmentation") {
  const auto words = enumerate_words(2, 4);
  for (const auto& u : words) {
    for (std::uint32_t g = 0; g < 2; ++g) {
      CHECK(augmentation(fox_derivative(u, g)) == u.exponent_sum(g));
    }
  }
  const auto small = enumerate_words(2, 3);
  for (const auto& u : small) {
    for (const auto& v : small) {
      for (std::uint32_t g = 0; g < 2; ++g) {
        // Derivatives are computed on reduced words, so compare against
        // the product rule applied to the reduced product.
        CHECK(fox_derivative(multiply(u, v), g) ==
              add(fox_derivative(u, g), left_mul(u, fox_derivative(v, g))));
      }
    }
  }
}

TEST_CASE("Alexander matrices") {
  auto m = alexander_matrix_mod_p(P("< x, y | [x,y] >"), ZHom{{1, 0}}, 2);
  REQUIRE(m.size() == 1);
  CHECK(m[0][0].is_zero());
  CHECK(m[0][1].to_poly(0) == fp(2, {1, 1}));

  CHECK(alexander_matrix_mod_p(P("< x, y | >"), ZHom{{1, 0}}, 2).empty());

  m = alexander_matrix_mod_p(P("< a, t | t a t^-1 a^-2 >"), ZHom{{0, 1}}, 2);
  CHECK(m[0][0].to_poly(0) == fp(2, {0, 1}));

  CHECK_THROWS_AS(alexander_matrix_mod_p(P("< x, y | x >"), ZHom{{1, 0}}, 2), Error);
  try {
    alexander_matrix_mod_p(P("< x, y | [x,y] >"), ZHom{{0, 0}}, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChiZero);
  }
}

TEST_CASE("Alexander polynomials") {
  auto a = alexander_poly_mod_p(P("< x, y | >"), ZHom{{1, 0}}, 2);
  CHECK(a.vanishes);
  CHECK(a.delta.is_zero());

  a = alexander_poly_mod_p(P("< x, y | [x,y] >"), ZHom{{1, 0}}, 2);
  CHECK_FALSE(a.vanishes);
  CHECK(a.delta == fp(2, {1, 1}));

  a = alexander_poly_mod_p(P("< x, y | x y x y^-1 x^-1 y^-1 >"), ZHom{{1, 1}}, 2);
  CHECK(a.delta == fp(2, {1, 1, 1}));
  a = alexander_poly_mod_p(P("< x, y | x y x y^-1 x^-1 y^-1 >"), ZHom{{1, 1}}, 3);
  CHECK(a.delta == fp(3, {1, 2, 1}));

  // Figure-eight knot: t^2 - 3t + 1.
  a = alexander_poly_mod_p(P("< x, y | x^-1 y x y^-1 x y x^-1 y^-1 x y^-1 >"),
                           ZHom{{1, 1}}, 5);
  CHECK(a.delta == fp(5, {1, 2, 1}));
  a = alexander_poly_mod_p(P("< x, y | x^-1 y x y^-1 x y x^-1 y^-1 x y^-1 >"),
                           ZHom{{1, 1}}, 7);
  CHECK(a.delta == fp(7, {1, 4, 1}));

  a = alexander_poly_mod_p(P("< t | >"), ZHom{{1}}, 3);
  CHECK(a.delta == fp(3, {1}));

  // Baumslag-Solitar BS(1,2): t - 2.
  a = alexander_poly_mod_p(P("< a, t | t a t^-1 a^-2 >"), ZHom{{0, 1}}, 3);
  CHECK(a.delta == fp(3, {1, 1}));
  a = alexander_poly_mod_p(P("< a, t | t a t^-1 a^-2 >"), ZHom{{0, 1}}, 2);
  CHECK(a.delta == fp(2, {1}));
}

TEST_CASE("determinants") {
  std::vector<std::vector<FpPoly>> m{{fp(5, {1, 1}), fp(5, {2})},
                                     {fp(5, {0, 1}), fp(5, {0, 0, 1})}};
  // (1+t) t^2 - 2 t = t^3 + t^2 - 2t
  CHECK(determinant(m, 5) == fp(5, {0, 3, 1, 1}));
  std::vector<std::vector<FpPoly>> swap{{fp(3, {}), fp(3, {1})}, {fp(3, {1}), fp(3, {})}};
  CHECK(determinant(swap, 3) == fp(3, {2}));
  // 3x3 against cofactor expansion.
  std::vector<std::vector<FpPoly>> big{
      {fp(7, {1, 2}), fp(7, {0, 1}), fp(7, {3})},
      {fp(7, {2}), fp(7, {1, 0, 1}), fp(7, {0, 4})},
      {fp(7, {5, 1}), fp(7, {1}), fp(7, {2, 2})}};
  auto minor = [&](std::size_t r, std::size_t c) {
    std::vector<std::vector<FpPoly>> out;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == r) continue;
      std::vector<FpPoly> row;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != c) row.push_back(big[i][j]);
      }
      out.push_back(row);
    }
    return out[0][0] * out[1][1] - out[0][1] * out[1][0];
  };
  FpPoly expected = big[0][0] * minor(0, 0) - big[0][1] * minor(0, 1) +
                    big[0][2] * minor(0, 2);
  CHECK(determinant(big, 7) == expected);
}
