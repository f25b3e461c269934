#include "pdef/gs.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdef/error.hpp"

namespace pdef {

namespace {

Rational tangent_at(const QPoly& f, const QPoly& df, const Rational& x,
                    const Rational& at) {
  return f(x) + df(x) * (at - x);
}

void require_convex_shape(const QPoly& f) {
  if (f.coefficient(0) != 1) {
    throw Error(ErrorCode::InvalidArgument, "expected F(0) = 1");
  }
  for (std::size_t i = 2; i < f.coefficients().size(); ++i) {
    if (f.coefficients()[i] < 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "expected nonnegative coefficients beyond degree 1");
    }
  }
}

// Decides whether F < 0 somewhere on (0, hi], hi <= 1; when hi = 1 the
// endpoint itself is excluded from witnesses.
NegativityVerdict decide_on(const QPoly& f, const Rational& hi,
                            const NegativityOptions& options) {
  require_convex_shape(f);
  const QPoly df = f.derivative();
  const Rational zero(0);

  if (f(hi) < 0) {
    if (hi < 1) return Witness{hi, f(hi)};
    Rational step(1, 2);
    for (std::size_t j = 0; j < options.max_bisection_steps; ++j) {
      const Rational t = hi - step;
      const Rational v = f(t);
      if (v < 0) return Witness{t, v};
      step /= 2;
    }
    return Inconclusive{"no witness found below t = 1"};
  }
  if (df(zero) >= 0) return NonNegative{NonNegativeKind::Increasing, zero, hi, {}};
  if (df(hi) <= 0) return NonNegative{NonNegativeKind::Decreasing, zero, hi, {}};

  const QPoly g = gcd(f, df);
  if (g.degree() >= 1 && count_roots_open(g, zero, hi) >= 1) {
    return NonNegative{NonNegativeKind::Tangency, zero, hi, g};
  }

  Rational a = zero;
  Rational b = hi;
  for (std::size_t step = 0; step < options.max_bisection_steps; ++step) {
    const Rational mid = (a + b) / 2;
    const Rational v = f(mid);
    if (v < 0) return Witness{mid, v};
    const int s = df.sign_at(mid);
    if (s == 0) return NonNegative{NonNegativeKind::ExactMinimum, mid, mid, {}};
    if (s < 0) {
      a = mid;
    } else {
      b = mid;
    }
    if (tangent_at(f, df, a, b) > 0 || tangent_at(f, df, b, a) > 0) {
      return NonNegative{NonNegativeKind::TangentBound, a, b, {}};
    }
  }
  return Inconclusive{"bisection step limit reached"};
}

bool verify_on(const QPoly& f, const Rational& hi, const NegativityVerdict& v) {
  if (const auto* w = std::get_if<Witness>(&v)) {
    const bool inside = w->t > 0 && (hi < 1 ? w->t <= hi : w->t < 1);
    return inside && w->value < 0 && f(w->t) == w->value;
  }
  const auto* n = std::get_if<NonNegative>(&v);
  if (n == nullptr) return false;
  for (std::size_t i = 2; i < f.coefficients().size(); ++i) {
    if (f.coefficients()[i] < 0) return false;
  }
  const QPoly df = f.derivative();
  switch (n->kind) {
    case NonNegativeKind::Increasing:
      return df(Rational(0)) >= 0 && f(Rational(0)) >= 0;
    case NonNegativeKind::Decreasing:
      return df(hi) <= 0 && f(hi) >= 0;
    case NonNegativeKind::Tangency: {
      const QPoly& g = n->tangency_factor;
      if (g.degree() < 1) return false;
      return divmod(f, g).second.is_zero() && divmod(df, g).second.is_zero() &&
             count_roots_open(g, Rational(0), hi) >= 1;
    }
    case NonNegativeKind::ExactMinimum:
      return n->a > 0 && n->a < hi && df(n->a) == 0 && f(n->a) >= 0;
    case NonNegativeKind::TangentBound:
      return n->a >= 0 && n->b <= hi && n->a < n->b && df(n->a) < 0 &&
             df(n->b) > 0 && f(n->a) >= 0 && f(n->b) >= 0 &&
             (tangent_at(f, df, n->a, n->b) > 0 ||
              tangent_at(f, df, n->b, n->a) > 0);
  }
  return false;
}

}  // namespace

QPoly GSFunction::polynomial() const {
  QPoly f(std::vector<Rational>{Rational(1)});
  Rational linear = -Rational(static_cast<unsigned long>(generators));
  if (tail_sigma) linear += *tail_sigma;
  f = f + QPoly::monomial(linear, 1);
  for (const auto* m : {&terms, &bounded_terms}) {
    for (const auto& [e, c] : *m) {
      f = f + QPoly::monomial(Rational(static_cast<unsigned long>(c)), e);
    }
  }
  return f;
}

Rational GSFunction::tail_interval_end() const {
  if (!tail_sigma) return Rational(1);
  // Largest j / 2^40 with p (j / 2^40)^(p-1) <= 1.
  const Integer scale = pow(Integer(2), 40);
  Integer lo = 0, hi = scale;
  const Integer bound = pow(scale, prime - 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (Integer(prime) * pow(mid, prime - 1) <= bound) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return frac(lo, scale);
}

Rational GSFunction::evaluate(const Rational& t) const {
  Rational v = 1 - Rational(static_cast<unsigned long>(generators)) * t;
  if (tail_sigma) v += *tail_sigma * t;
  for (const auto* m : {&terms, &bounded_terms}) {
    for (const auto& [e, c] : *m) {
      v += Rational(static_cast<unsigned long>(c)) * pow(t, e);
    }
  }
  return v;
}

std::string to_string(const GSFunction& f) {
  std::string out = to_string(f.polynomial());
  if (f.has_bounded_terms()) {
    out += " (lower-bound exponents:";
    for (const auto& [e, c] : f.bounded_terms) {
      out += " " + std::to_string(c) + "x" + std::to_string(e);
    }
    out += ")";
  }
  return out;
}

std::string_view to_string(NonNegativeKind k) noexcept {
  switch (k) {
    case NonNegativeKind::Increasing: return "increasing";
    case NonNegativeKind::Decreasing: return "decreasing";
    case NonNegativeKind::Tangency: return "tangency";
    case NonNegativeKind::ExactMinimum: return "exact-minimum";
    case NonNegativeKind::TangentBound: return "tangent-bound";
  }
  return "unknown";
}

bool is_witness(const NegativityVerdict& v) noexcept {
  return std::holds_alternative<Witness>(v);
}

bool is_nonnegative(const NegativityVerdict& v) noexcept {
  return std::holds_alternative<NonNegative>(v);
}

std::string describe(const NegativityVerdict& v) {
  if (const auto* w = std::get_if<Witness>(&v)) {
    return "witness: F(" + to_string(w->t) + ") = " + to_string(w->value);
  }
  if (const auto* n = std::get_if<NonNegative>(&v)) {
    std::string out = "nonnegative (" + std::string(to_string(n->kind)) + ")";
    if (n->kind == NonNegativeKind::Tangency) {
      out += ": common factor " + to_string(n->tangency_factor);
    } else if (n->kind == NonNegativeKind::TangentBound) {
      out += " on [" + to_string(n->a) + ", " + to_string(n->b) + "]";
    } else if (n->kind == NonNegativeKind::ExactMinimum) {
      out += " at " + to_string(n->a);
    }
    return out;
  }
  return "inconclusive: " + std::get<Inconclusive>(v).reason;
}

NegativityVerdict decide_negativity(const QPoly& f,
                                    const NegativityOptions& options) {
  return decide_on(f, Rational(1), options);
}

NegativityVerdict decide_negativity(const GSFunction& f,
                                    const NegativityOptions& options) {
  const Rational hi = f.tail_interval_end();
  NegativityVerdict v = decide_on(f.polynomial(), hi, options);
  if (is_nonnegative(v)) {
    if (f.tail_sigma) {
      return Inconclusive{"bounding polynomial is nonnegative on (0, " +
                          to_string(hi) + "]"};
    }
    if (f.has_bounded_terms()) {
      return Inconclusive{
          "some degrees are only lower bounds; raise the degree bound"};
    }
  }
  return v;
}

bool verify_verdict(const QPoly& f, const NegativityVerdict& v) {
  return verify_on(f, Rational(1), v);
}

bool verify_verdict(const GSFunction& f, const NegativityVerdict& v) {
  if (const auto* w = std::get_if<Witness>(&v)) {
    if (f.evaluate(w->t) != w->value) return false;
  }
  if (is_nonnegative(v) && (f.tail_sigma || f.has_bounded_terms())) return false;
  return verify_on(f.polynomial(), f.tail_interval_end(), v);
}

GSFunction gs_function(const Presentation& p, std::uint64_t prime,
                       std::size_t max_degree, const SeriesLimits& limits) {
  if (!p.is_finite()) {
    throw Error(ErrorCode::InfinitePresentation,
                "the GS function needs a finite presentation");
  }
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime");
  }
  GSFunction f;
  f.prime = prime;
  f.generators = p.rank();
  for (const auto& r : p.relators()) {
    const DegreeResult d = relator_degree(r, prime, max_degree, limits);
    ++(d.exact ? f.terms : f.bounded_terms)[d.value];
  }
  return f;
}

GSFunction puchta_function(const Presentation& p, std::uint64_t prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime");
  }
  GSFunction f;
  f.prime = prime;
  f.generators = p.rank();
  for (const auto& r : p.relators()) {
    ++f.terms[pow(Integer(prime), r.nu_p(prime)).get_ui()];
  }
  if (p.tail()) {
    if (p.tail()->prime != prime) {
      throw Error(ErrorCode::InvalidArgument,
                  "tail budget is declared for a different prime");
    }
    f.tail_sigma = p.tail()->sigma;
  }
  return f;
}

NegativityVerdict puchta_route(const Presentation& p, std::uint64_t prime,
                               const NegativityOptions& options) {
  return decide_negativity(puchta_function(p, prime), options);
}

std::string_view to_string(PowerCase c) noexcept {
  switch (c) {
    case PowerCase::NotPuchta: return "not-puchta";
    case PowerCase::GS: return "gs";
    case PowerCase::Exceptional: return "exceptional";
  }
  return "unknown";
}

PowerCase classify_power_case(std::uint64_t p, std::uint64_t k,
                              std::uint64_t l) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (Rational(static_cast<unsigned long>(k)) -
          frac(static_cast<unsigned long>(l), static_cast<unsigned long>(p)) <=
      1) {
    return PowerCase::NotPuchta;
  }
  GSFunction f;
  f.prime = p;
  f.generators = k;
  if (l > 0) f.terms[p] = l;
  const NegativityVerdict v = decide_negativity(f.polynomial());
  if (is_witness(v)) return PowerCase::GS;
  if (is_nonnegative(v)) return PowerCase::Exceptional;
  throw std::logic_error("power case undecided: " + describe(v));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> printed_exceptional(
    std::uint64_t p) {
  switch (p) {
    case 2: return {{2, 1}, {3, 3}, {4, 4}, {4, 5}, {6, 6}};
    case 3: return {{2, 2}, {3, 4}, {3, 5}};
    case 5: return {{2, 3}, {2, 4}};
    default: return {};
  }
}

namespace {

Integer lemma_margin(std::uint64_t p, std::uint64_t k) {
  return pow(Integer(p), p + 1) * (Integer(k) - 1) -
         pow(Integer(k), p) * pow(Integer(p - 1), p - 1);
}

}  // namespace

bool exceptional_candidate(std::uint64_t p, std::uint64_t k) {
  return lemma_margin(p, k) > 0;
}

std::vector<ExceptionalBlock> enumerate_exceptional(std::uint64_t p_max) {
  if (p_max < 2) throw Error(ErrorCode::InvalidArgument, "p_max must be >= 2");
  std::vector<ExceptionalBlock> out;
  for (std::uint64_t p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    ExceptionalBlock block;
    block.prime = p;
    block.printed = printed_exceptional(p);
    // The margin is concave in k: stop once it is nonpositive and falling.
    for (std::uint64_t k = 2;; ++k) {
      block.last_k_scanned = k;
      const Integer m = lemma_margin(p, k);
      if (m > 0) {
        for (std::uint64_t l = 1; l < p * (k - 1); ++l) {
          if (classify_power_case(p, k, l) == PowerCase::Exceptional) {
            block.oracle.emplace_back(k, l);
          }
        }
      } else if (lemma_margin(p, k + 1) <= m) {
        break;
      }
    }
    if (!block.matches_printed()) {
      auto fmt = [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) s += ",";
          s += "(" + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
        }
        return s + "}";
      };
      block.warning = "p=" + std::to_string(p) + ": exact classification " +
                      fmt(block.oracle) + " differs from the published list " +
                      fmt(block.printed);
    }
    out.push_back(std::move(block));
  }
  return out;
}

Rational strongly_gs_margin(const Presentation& p, std::uint64_t prime) {
  if (!p.is_finite()) {
    throw Error(ErrorCode::InfinitePresentation, "needs a finite presentation");
  }
  const auto dp = static_cast<unsigned long>(p_rank(p, prime));
  if (dp < 2) {
    throw Error(ErrorCode::PRankTooSmall,
                "d_p = " + std::to_string(dp) + " is below 2");
  }
  const Rational d(dp);
  return deficiency(p).value() + d * d / 4 - d;
}

std::uint64_t gs_subgroup_index(std::uint64_t p, const Rational& excess) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
  if (excess <= 0) throw Error(ErrorCode::InvalidArgument, "excess must be positive");
  Integer pk = 1;
  for (std::uint64_t k = 0;; ++k, pk *= p) {
    if (pow(Rational(pk) * excess + 1, p - 1) > Rational(static_cast<unsigned long>(p))) {
      return k;
    }
  }
}

}  // namespace pdef
