#include "doctest.h"
#include "pdef/corpus.hpp"
#include "pdef/error.hpp"
#include "pdef/rewriting.hpp"

using namespace pdef;

namespace {

Presentation P(const char* text) { return parse_presentation(text); }

CpHom hom(std::uint64_t p, std::vector<std::uint64_t> v) {
  return CpHom{p, std::move(v)};
}

}  // namespace

TEST_CASE("normalization") {
  auto n = normalize_for_theta(P("< x, t | x^2 >"), hom(2, {0, 1}));
  CHECK(n.presentation == P("< x, t | x^2 >"));
  CHECK(n.theta.values == std::vector<std::uint64_t>{0, 1});

  n = normalize_for_theta(P("< x, t | (x t)^2 >"), hom(2, {1, 1}));
  CHECK(n.presentation == P("< x, t | x^2 >"));
  CHECK(n.presentation.relators()[0].nu_p(2) == 1);

  n = normalize_for_theta(P("< t, x | x^3 t^-3 >"), hom(3, {1, 2}));
  CHECK(n.presentation.alphabet().names() == std::vector<std::string>{"t", "x"});
  CHECK(annihilates(n.theta, n.presentation));
  CHECK(n.theta.values == std::vector<std::uint64_t>{0, 1});

  CHECK_THROWS_AS(normalize_for_theta(P("< x, t | x^2 >"), hom(2, {0, 0})), Error);
  try {
    normalize_for_theta(P("< x, t | x t >"), hom(2, {0, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ThetaNotAnnihilating);
  }
  try {
    normalize_for_theta(P("< x, t | x^2 >"), hom(2, {0, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ThetaZero);
  }
}

TEST_CASE("normalization preserves structure on the corpus") {
  for (std::uint64_t p : {2, 3, 5}) {
    CorpusOptions o;
    o.seed = 11 + p;
    o.count = 60;
    o.prime = p;
    for (const auto& g : random_corpus(o)) {
      for (const auto& theta : hom_to_Cp_basis(g, p)) {
        auto n = normalize_for_theta(g, theta);
        REQUIRE(n.presentation.relators().size() == g.relators().size());
        CHECK(n.presentation.rank() == g.rank());
        CHECK(annihilates(n.theta, n.presentation));
        for (std::size_t i = 0; i < g.relators().size(); ++i) {
          CHECK(n.presentation.relators()[i].nu_p(p) == g.relators()[i].nu_p(p));
        }
        for (std::uint32_t j = 0; j < n.presentation.rank(); ++j) {
          CHECK(n.theta(Word::generator(j)) ==
                (j == n.t_index() ? 1U : 0U));
        }
      }
    }
  }
}

TEST_CASE("kernel scan") {
  auto n = normalize_for_theta(P("< x, t | x^2 >"), hom(3, {0, 1}));
  const Word t = Word::generator(1);
  const Word x = Word::generator(0);
  CHECK(rewrite_in_kernel(t.pow(3), n) == Word::generator(kernel_s_index()));
  CHECK(rewrite_in_kernel(x, n) ==
        Word::generator(kernel_generator_index(0, 0, 3)));
  CHECK(rewrite_in_kernel(conjugate(t, x), n) ==
        Word::generator(kernel_generator_index(0, 1, 3)));
  CHECK(rewrite_in_kernel(t.pow(-3), n) == Word::generator(0, -1));
  CHECK_THROWS_AS(rewrite_in_kernel(t, n), Error);

  for (const auto& u : enumerate_words(2, 5)) {
    if (n.theta(u) != 0) continue;
    CHECK(lift_from_kernel(rewrite_in_kernel(u, n), n) == u);
    for (const auto& v : enumerate_words(2, 3)) {
      if (n.theta(v) != 0) continue;
      CHECK(rewrite_in_kernel(multiply(u, v), n) ==
            multiply(rewrite_in_kernel(u, n), rewrite_in_kernel(v, n)));
    }
  }
}

TEST_CASE("cyclic Reidemeister-Schreier") {
  auto k = reidemeister_schreier_cyclic(P("< x, t | x^2 >"), hom(2, {0, 1}));
  CHECK(k.presentation == P("< s, x_0, x_1 | x_0^2, x_1^2 >"));

  k = reidemeister_schreier_cyclic(P("< x, t | x^2 >"), hom(3, {0, 1}));
  CHECK(k.presentation.rank() == 4);
  CHECK(deficiency(k.presentation) == ExtendedRational(Rational(1)));

  for (std::uint64_t p : {2, 3}) {
    CorpusOptions o;
    o.seed = 3 * p;
    o.count = 80;
    o.prime = p;
    for (const auto& g : random_corpus(o)) {
      for (const auto& theta : hom_to_Cp_basis(g, p)) {
        auto h = reidemeister_schreier_cyclic(g, theta);
        CHECK(h.presentation.rank() == p * (g.rank() - 1) + 1);
        CHECK(deficiency(h.presentation).value() - 1 ==
              Rational(static_cast<long>(p)) * (deficiency(g).value() - 1));
      }
    }
  }
}

TEST_CASE("Puchta rewriting examples") {
  auto k = puchta_rewrite(P("< x, t | x^4 >"), hom(2, {0, 1}));
  CHECK(k.presentation == P("< s, x_0, x_1 | x_0^4, x_1^4 >"));
  CHECK(p_deficiency(k.source.presentation, 2).value() == frac(7, 4));
  CHECK(p_deficiency(k.presentation, 2).value() == frac(5, 2));
  CHECK(k.recorded_p_deficiency() == frac(5, 2));

  k = puchta_rewrite(P("< x, t | t^2 >"), hom(2, {0, 1}));
  CHECK(k.presentation == P("< s, x_0, x_1 | s >"));
  REQUIRE(k.provenance.size() == 1);
  CHECK(k.provenance[0].branch == Branch::Collapsed);
  CHECK(k.provenance[0].recorded_valuation == 0);
  CHECK(k.recorded_p_deficiency() == Rational(2));

  // t^j [x,t] t^-j for j = 0, 1.
  k = puchta_rewrite(P("< x, t | [x,t] >"), hom(2, {0, 1}));
  CHECK(k.presentation == P("< s, x_0, x_1 | x_0 x_1^-1, x_1 s x_0^-1 s^-1 >"));
  CHECK(k.provenance[0].branch == Branch::Split);
  CHECK(k.provenance[1].conjugating_power == 1);
}

TEST_CASE("Puchta rewriting on the corpus") {
  for (std::uint64_t p : {2, 3}) {
    CorpusOptions o;
    o.seed = 100 + p;
    o.count = 150;
    o.prime = p;
    for (const auto& g : random_corpus(o)) {
      for (const auto& theta : hom_to_Cp_basis(g, p)) {
        auto h = puchta_rewrite(g, theta);
        const Rational before = p_deficiency(g, p).value();
        CHECK(h.recorded_p_deficiency() - 1 ==
              Rational(static_cast<long>(p)) * (before - 1));
        REQUIRE(h.provenance.size() == h.presentation.relators().size());
        const auto& src = h.source.presentation.relators();
        for (std::size_t i = 0; i < h.provenance.size(); ++i) {
          const auto& pr = h.provenance[i];
          const Word& out = h.presentation.relators()[i].word();
          CHECK(nu_p(out, p) == pr.recorded_valuation);
          CHECK(are_conjugate(lift_from_kernel(out, h.source),
                              src[pr.source_relator].word()));
        }
      }
    }
  }
}

TEST_CASE("collapsed conjugates are cyclic permutations") {
  auto g = P("< x, t | (x t)^4, (t x^-1 t)^2 >");
  for (std::uint64_t p : {2}) {
    auto n = normalize_for_theta(g, hom(p, {0, 1}));
    const Word t = Word::generator(n.t_index());
    for (const auto& r : n.presentation.relators()) {
      const Word root = r.p_power_root(p);
      if (n.theta(root) == 0) continue;
      const Word wp = root.pow(static_cast<std::int64_t>(p));
      for (std::uint64_t j = 0; j + 1 < p; ++j) {
        Word a = rewrite_in_kernel(
            conjugate(t.pow(static_cast<std::int64_t>(j)), wp), n);
        Word b = rewrite_in_kernel(
            conjugate(t.pow(static_cast<std::int64_t>(j + 1)), wp), n);
        CHECK(are_conjugate(a, b));
      }
    }
  }
  auto g3 = P("< x, t | (x t)^3, (t^2 x)^9 >");
  auto n = normalize_for_theta(g3, hom(3, {0, 1}));
  const Word t = Word::generator(n.t_index());
  for (const auto& r : n.presentation.relators()) {
    const Word wp = r.p_power_root(3).pow(3);
    Word prev = rewrite_in_kernel(wp, n);
    for (std::int64_t j = 1; j < 3; ++j) {
      Word next = rewrite_in_kernel(conjugate(t.pow(j), wp), n);
      CHECK(are_conjugate(prev, next));
      prev = next;
    }
  }
}

TEST_CASE("restricted homomorphisms") {
  auto g = P("< x, y, t | x^2 >");
  auto basis = hom_to_Cp_basis(g, 2);
  REQUIRE(basis.size() == 3);
  auto k = puchta_rewrite(g, basis[0]);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    auto r = restrict_hom(k, basis[i]);
    CHECK_FALSE(r.is_zero());
    CHECK(annihilates(r, k.presentation));
    for (std::uint32_t j = 0; j < k.presentation.rank(); ++j) {
      Word gen = Word::generator(j);
      Word lifted = lift_from_kernel(gen, k.source);
      Word in_source = Word();
      for (const Letter& l : lifted) {
        in_source = multiply(in_source, l.sign > 0
                                            ? k.source.inverse_substitution[l.gen]
                                            : invert(k.source.inverse_substitution[l.gen]));
      }
      CHECK(r(gen) == basis[i](in_source));
    }
  }
  CHECK(restrict_hom(k, basis[0]).is_zero());
}
