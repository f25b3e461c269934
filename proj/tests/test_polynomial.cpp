#include "doctest.h"
#include "pdef/error.hpp"
#include "pdef/polynomial.hpp"

using namespace pdef;

namespace {

QPoly q(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

}  // namespace

TEST_CASE("rational polynomials") {
  const QPoly f = q({1, -3, 3});
  CHECK(f.degree() == 2);
  CHECK(f(frac(1, 2)) == frac(1, 4));
  CHECK(f.derivative() == q({-3, 6}));
  CHECK(to_string(f) == "1 - 3t + 3t^2");
  CHECK(to_string(QPoly(std::vector<Rational>{0, frac(1, 2)})) == "(1/2)t");
  CHECK(to_string(QPoly()) == "0");
  CHECK(q({0, 0, 0}).is_zero());

  auto [quo, rem] = divmod(q({-1, 0, 1}), q({-1, 1}));
  CHECK(quo == q({1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(q({1, -2, 1}), q({-2, 2})) == q({-1, 1}));
  CHECK(gcd(q({1, -3, 3}), q({-3, 6})).degree() == 0);
  CHECK_THROWS_AS(divmod(f, QPoly()), Error);
}

TEST_CASE("Sturm root counts") {
  // (t - 1/3)(t - 1/2)(t - 2)
  QPoly f = q({-1, 3}) * q({-1, 2}) * q({-2, 1});
  CHECK(count_roots_open(f, 0, 1) == 2);
  CHECK(count_roots_open(f, 0, 3) == 3);
  CHECK(count_roots_open(f, frac(1, 3), frac(1, 2)) == 0);
  CHECK(count_roots_open(f, frac(1, 3), 1) == 1);
  // Repeated roots count once.
  CHECK(count_roots_open(q({1, -2, 1}) * q({1, -2, 1}), 0, 2) == 1);
  CHECK(count_roots_open(q({1, 0, 1}), -10, 10) == 0);
  CHECK(count_roots_open(q({1, -4, 4}), 0, 1) == 1);
}

TEST_CASE("polynomials over F_p") {
  FpPoly a(2, {1, 1});  // t + 1
  CHECK(to_string(a * a) == "t^2 + 1");
  FpPoly b(3, {2, 0, 1});
  CHECK(to_string(b) == "t^2 + 2");
  CHECK(to_string(b.monic()) == "t^2 + 2");
  FpPoly c(5, {0, 0, 3, 1});
  CHECK(c.strip_t() == FpPoly(5, {3, 1}));
  CHECK(gcd(FpPoly(2, {1, 0, 1}), FpPoly(2, {1, 1})) == FpPoly(2, {1, 1}));
  auto [quo, rem] = divmod(FpPoly(3, {1, 0, 0, 1}), FpPoly(3, {1, 1}));
  CHECK(rem.is_zero());
  CHECK(quo * FpPoly(3, {1, 1}) == FpPoly(3, {1, 0, 0, 1}));
  CHECK(FpPoly(7, {7, 14}).is_zero());
  CHECK(FpPoly(3, {1, 2}) - FpPoly(3, {1, 2}) == FpPoly(3));
}

TEST_CASE("Laurent polynomials over F_p") {
  LaurentPolyFp l(2);
  l.add_term(-1, 1);
  l.add_term(1, 1);
  l.add_term(1, 1);
  CHECK(l.terms().size() == 1);
  CHECK(to_string(l) == "t^-1");
  l.add_term(0, 3);
  CHECK(l.min_exponent() == -1);
  CHECK(l.to_poly(1) == FpPoly(2, {1, 1}));
  CHECK_THROWS_AS(l.to_poly(0), Error);
  CHECK(LaurentPolyFp::from_poly(FpPoly(2, {1, 1})).terms().size() == 2);
}
