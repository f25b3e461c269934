#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdef/presentation.hpp"
#include "pdef/rational.hpp"

namespace pdef {

enum class DescentMode { Explicit, Symbolic };
enum class DescentPhase { Start, Approach, Rapid };

std::string_view to_string(DescentMode m) noexcept;
std::string_view to_string(DescentPhase p) noexcept;

struct DescentStep {
  std::size_t step = 0;
  DescentPhase phase = DescentPhase::Start;
  // [G : G_i] = p^index_log_p
  Integer index_log_p = 0;
  // Exact in explicit mode, lower bound in symbolic mode. Empty when too
  // large to write down.
  std::optional<Rational> def_p;
  std::optional<Integer> d_p;
  // Rapid phase only: d_p(H_i / H_(i+1)) = p^quotient_rank_log_p and the
  // ratio d_p(H_i/H_(i+1)) / [H : H_i].
  std::optional<Integer> quotient_rank_log_p;
  std::optional<Integer> rapid_index_log_p;  // [H : H_i] = p^this
  std::optional<Rational> ratio;
  // d_p(H_i) - d_p(H_i/H_(i+1)): rank left unused by the grouped kernel.
  std::optional<Integer> rank_surplus;
  // Explicit mode only.
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::size_t letters = 0;
};

struct DescentCertificate {
  DescentMode mode = DescentMode::Explicit;
  std::uint64_t prime = 2;
  std::vector<DescentStep> steps;
  // Infimum of the recorded rapid-phase ratios.
  std::optional<Rational> infimum;
  // Explicit mode stopped on the size budget before the requested steps.
  bool truncated = false;
  std::string truncation_reason;
};

struct DescentBudget {
  std::size_t max_letters = 100'000;
  std::size_t max_relators = 1'000;
};

// Iterated index-p kernels following the rapid-descent construction: index-p
// steps until def_p - 1 >= 1, then kernels of maps onto (C_p)^r realised as r
// successive index-p steps along independent homomorphisms. Each recorded step
// is one rewriting. Throws NotPuchta, InfinitePresentation.
DescentCertificate build_descent_explicit(
    const Presentation& p, std::uint64_t prime, std::size_t steps,
    const DescentBudget& budget = {},
    const std::optional<CpHom>& first_theta = std::nullopt);

// Tracks the same series by formula from def_p(G). `steps` counts rapid
// phase levels.
DescentCertificate build_descent_symbolic(const Rational& def_p_start,
                                          std::uint64_t prime,
                                          std::size_t steps);

struct RankGradientBound {
  Rational bound;     // def_p - 1
  bool positive = false;
};

RankGradientBound rank_gradient_bound(const Presentation& p,
                                      std::uint64_t prime);

}  // namespace pdef
