#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pdef/magnus.hpp"
#include "pdef/polynomial.hpp"
#include "pdef/presentation.hpp"
#include "pdef/rational.hpp"

namespace pdef {

// F(t) = 1 - k t + sum c_e t^e.
struct GSFunction {
  std::uint64_t prime = 2;
  std::uint64_t generators = 1;
  // exponent -> multiplicity, exact exponents
  std::map<std::uint64_t, std::uint64_t> terms;
  // exponent -> multiplicity, exponents that are only lower bounds (the
  // true term t^deg is <= t^e on (0,1))
  std::map<std::uint64_t, std::uint64_t> bounded_terms;
  // Tail relators whose terms sum to at most tail_sigma * t on
  // [0, p^(-1/(p-1))].
  std::optional<Rational> tail_sigma;

  bool has_bounded_terms() const noexcept { return !bounded_terms.empty(); }
  // With a tail this is the bounding polynomial 1 - (k - sigma) t + ...,
  // valid on [0, tail_interval_end()].
  QPoly polynomial() const;
  // Largest dyadic y with p y^(p-1) <= 1 when a tail is present, else 1.
  Rational tail_interval_end() const;
  // Term-by-term evaluation, independent of the dense polynomial.
  Rational evaluate(const Rational& t) const;
};

std::string to_string(const GSFunction& f);

struct Witness {
  Rational t;
  Rational value;  // F(t) < 0
};

enum class NonNegativeKind {
  // F' >= 0 on (0,1) and F(0) = 1.
  Increasing,
  // F' <= 0 on (0,1) and F(1) >= 0.
  Decreasing,
  // gcd(F, F') has a root in (0,1): the minimum is exactly 0.
  Tangency,
  // F'(m) = 0 at a rational m with F(m) >= 0.
  ExactMinimum,
  // F'(a) < 0 < F'(b) and both tangent lines stay positive over [a,b].
  TangentBound,
};

std::string_view to_string(NonNegativeKind k) noexcept;

struct NonNegative {
  NonNegativeKind kind = NonNegativeKind::TangentBound;
  Rational a = 0;
  Rational b = 1;
  // Tangency: the common factor of F and F'.
  QPoly tangency_factor;
};

struct Inconclusive {
  std::string reason;
};

using NegativityVerdict = std::variant<Witness, NonNegative, Inconclusive>;

bool is_witness(const NegativityVerdict& v) noexcept;
bool is_nonnegative(const NegativityVerdict& v) noexcept;
std::string describe(const NegativityVerdict& v);

struct NegativityOptions {
  std::size_t max_bisection_steps = 4096;
};

// Exact decision of whether the convex polynomial F dips below 0 on (0,1).
// `f` must be of the form 1 - k t + (nonnegative terms of degree >= 1).
NegativityVerdict decide_negativity(const QPoly& f,
                                    const NegativityOptions& options = {});
// Bounded exponents only weaken NonNegative answers to Inconclusive; a
// Witness for the bounding polynomial is a witness for F itself.
NegativityVerdict decide_negativity(const GSFunction& f,
                                    const NegativityOptions& options = {});

// Re-checks a certificate with independent rational arithmetic.
bool verify_verdict(const QPoly& f, const NegativityVerdict& v);
bool verify_verdict(const GSFunction& f, const NegativityVerdict& v);

// Exponents are the Zassenhaus degrees of the relators. Requires a finite
// presentation (InfinitePresentation).
GSFunction gs_function(const Presentation& p, std::uint64_t prime,
                       std::size_t max_degree = 32,
                       const SeriesLimits& limits = {});

// Exponents p^nu_p(r); dominates gs_function on (0,1). A tail budget is
// carried in tail_sigma.
GSFunction puchta_function(const Presentation& p, std::uint64_t prime);

// Puchta-function route. With a tail, every tail term t^(p^m) is bounded by
// t / p^m on [0, p^(-1/(p-1))], so only witnesses inside that interval
// count.
NegativityVerdict puchta_route(const Presentation& p, std::uint64_t prime,
                               const NegativityOptions& options = {});

enum class PowerCase { NotPuchta, GS, Exceptional };
std::string_view to_string(PowerCase c) noexcept;

// Presentation with k generators and l p-th powers of degree-1 words:
// GS function 1 - k t + l t^p.
PowerCase classify_power_case(std::uint64_t p, std::uint64_t k,
                              std::uint64_t l);

struct ExceptionalBlock {
  std::uint64_t prime = 2;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> oracle;  // (k, l)
  std::vector<std::pair<std::uint64_t, std::uint64_t>> printed;
  std::uint64_t last_k_scanned = 1;
  bool matches_printed() const { return oracle == printed; }
  // Non-empty when the oracle output differs from the published table.
  std::string warning;
};

// The published table of exceptional (k, l) per prime (empty for p >= 7).
std::vector<std::pair<std::uint64_t, std::uint64_t>> printed_exceptional(
    std::uint64_t p);

// True while k may still admit an exceptional l for prime p.
bool exceptional_candidate(std::uint64_t p, std::uint64_t k);

std::vector<ExceptionalBlock> enumerate_exceptional(std::uint64_t p_max);

// def + d_p^2/4 - d_p for a finite presentation. Throws PRankTooSmall when
// d_p < 2, InfinitePresentation with a tail.
Rational strongly_gs_margin(const Presentation& p, std::uint64_t prime);

// Least k >= 0 with (p^k e + 1)^(p-1) > p. Throws InvalidArgument for e <= 0.
std::uint64_t gs_subgroup_index(std::uint64_t p, const Rational& excess);

}  // namespace pdef
