#include "pdef/descent.hpp"

#include <stdexcept>

#include "pdef/error.hpp"
#include "pdef/rewriting.hpp"

namespace pdef {

namespace {

// Exponents above these are carried symbolically only.
constexpr unsigned long kMaxWrittenExponent = 1ul << 12;
constexpr unsigned long kMaxIndexExponent = 1ul << 24;

void check_prime(std::uint64_t prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(prime) + " is not prime");
  }
}

Rational require_puchta(const Presentation& p, std::uint64_t prime) {
  if (!p.is_finite()) {
    throw Error(ErrorCode::InfinitePresentation,
                "descent needs a finite presentation");
  }
  const ExtendedRational d = p_deficiency(p, prime);
  if (!d.is_finite() || d.value() <= 1) {
    throw Error(ErrorCode::NotPuchta,
                "def_" + std::to_string(prime) + " = " + to_string(d) +
                    " is not > 1");
  }
  return d.value();
}

// Least n >= 0 with p^n eps >= 1.
std::size_t approach_length(const Rational& eps, std::uint64_t prime) {
  std::size_t n = 0;
  Rational v = eps;
  while (v < 1) {
    v *= prime;
    ++n;
  }
  return n;
}

DescentStep explicit_row(const Presentation& p, std::uint64_t prime,
                         std::size_t step, DescentPhase phase,
                         std::size_t index_log) {
  DescentStep s;
  s.step = step;
  s.phase = phase;
  s.index_log_p = static_cast<unsigned long>(index_log);
  s.def_p = p_deficiency(p, prime).value();
  s.d_p = static_cast<unsigned long>(p_rank(p, prime));
  s.generators = p.rank();
  s.relators = p.relators().size();
  s.letters = p.total_length();
  if (*s.d_p < ceil(*s.def_p)) {
    throw std::logic_error("d_p below def_p");
  }
  return s;
}

}  // namespace

std::string_view to_string(DescentMode m) noexcept {
  switch (m) {
    case DescentMode::Explicit:
      return "explicit";
    case DescentMode::Symbolic:
      return "symbolic";
  }
  return "?";
}

std::string_view to_string(DescentPhase p) noexcept {
  switch (p) {
    case DescentPhase::Start:
      return "start";
    case DescentPhase::Approach:
      return "approach";
    case DescentPhase::Rapid:
      return "rapid";
  }
  return "?";
}

DescentCertificate build_descent_explicit(const Presentation& p,
                                          std::uint64_t prime,
                                          std::size_t steps,
                                          const DescentBudget& budget,
                                          const std::optional<CpHom>& first_theta) {
  check_prime(prime);
  const Rational start = require_puchta(p, prime);
  const std::size_t approach = approach_length(start - 1, prime);

  DescentCertificate cert;
  cert.mode = DescentMode::Explicit;
  cert.prime = prime;
  cert.steps.push_back(explicit_row(p, prime, 0, DescentPhase::Start, 0));

  Presentation current = p;
  // Homomorphisms still to be applied in the current rapid group, expressed
  // on `current`.
  std::vector<CpHom> pending;
  // Rapid group bookkeeping: E = log_p [H : H_i] at the top of the group.
  Integer group_top = 0;
  Integer group_size = 1;
  Integer group_top_dp = 0;
  bool in_group = false;

  for (std::size_t i = 1; i <= steps; ++i) {
    const bool approaching = i <= approach;
    if (!approaching && !in_group) {
      // Open the next group H_k -> H_(k+1) of size p^E.
      group_size = pow(Integer(prime), group_top.get_ui());
      if (!group_size.fits_ulong_p()) {
        cert.truncated = true;
        cert.truncation_reason = "rapid group too large to realise";
        break;
      }
      auto basis = hom_to_Cp_basis(current, prime);
      if (Integer(static_cast<unsigned long>(basis.size())) < group_size) {
        throw std::logic_error("p-rank too small for the rapid group");
      }
      group_top_dp = static_cast<unsigned long>(basis.size());
      basis.resize(group_size.get_ui());
      pending = std::move(basis);
      in_group = true;
    }

    CpHom theta;
    if (i == 1 && first_theta) {
      theta = *first_theta;
      if (!pending.empty()) pending.erase(pending.begin());
    } else if (approaching) {
      auto basis = hom_to_Cp_basis(current, prime);
      if (basis.empty()) throw std::logic_error("no surjection onto C_p");
      theta = basis.front();
    } else {
      theta = pending.front();
      pending.erase(pending.begin());
    }

    KernelPresentation k = puchta_rewrite(current, theta);
    if (k.presentation.total_length() > budget.max_letters ||
        k.presentation.relators().size() > budget.max_relators) {
      cert.truncated = true;
      cert.truncation_reason =
          "step " + std::to_string(i) + " exceeds the budget (" +
          std::to_string(k.presentation.total_length()) + " letters, " +
          std::to_string(k.presentation.relators().size()) + " relators)";
      break;
    }
    for (CpHom& phi : pending) {
      phi = restrict_hom(k, phi);
      if (phi.is_zero()) throw std::logic_error("dependent homomorphisms");
    }

    const Rational before = p_deficiency(current, prime).value();
    current = std::move(k.presentation);
    DescentStep row = explicit_row(
        current, prime, i,
        approaching ? DescentPhase::Approach : DescentPhase::Rapid, i);
    if (*row.def_p - 1 != Rational(prime) * (before - 1)) {
      throw std::logic_error("multiplicativity failed in descent");
    }
    if (!approaching && pending.empty()) {
      // Completed H_k -> H_(k+1).
      row.quotient_rank_log_p = group_top;
      row.rapid_index_log_p = group_top;
      row.ratio = Rational(1);
      row.rank_surplus = group_top_dp - group_size;
      cert.infimum = Rational(1);
      group_top += group_size;
      in_group = false;
    }
    cert.steps.push_back(std::move(row));
  }
  return cert;
}

DescentCertificate build_descent_symbolic(const Rational& def_p_start,
                                          std::uint64_t prime,
                                          std::size_t steps) {
  check_prime(prime);
  if (def_p_start <= 1) {
    throw Error(ErrorCode::NotPuchta,
                "def_p = " + to_string(def_p_start) + " is not > 1");
  }
  const Rational eps = def_p_start - 1;
  const std::size_t approach = approach_length(eps, prime);

  DescentCertificate cert;
  cert.mode = DescentMode::Symbolic;
  cert.prime = prime;

  auto row = [&](std::size_t step, DescentPhase phase, const Integer& index) {
    DescentStep s;
    s.step = step;
    s.phase = phase;
    s.index_log_p = index;
    if (index <= kMaxWrittenExponent) {
      s.def_p = 1 + pow(Rational(prime), index.get_ui()) * eps;
      s.d_p = ceil(*s.def_p);
    }
    return s;
  };

  cert.steps.push_back(row(0, DescentPhase::Start, 0));
  for (std::size_t i = 1; i <= approach; ++i) {
    cert.steps.push_back(
        row(i, DescentPhase::Approach, static_cast<unsigned long>(i)));
  }

  // E_k = log_p [H : H_k]: E_0 = 0, E_(k+1) = E_k + p^E_k.
  Integer e = 0;
  for (std::size_t k = 1; k <= steps; ++k) {
    if (e > kMaxIndexExponent) {
      cert.truncated = true;
      cert.truncation_reason = "index exponent exceeds 2^24";
      break;
    }
    const Integer quotient = pow(Integer(prime), e.get_ui());
    const Integer next = e + quotient;
    DescentStep s = row(approach + k, DescentPhase::Rapid,
                        next + static_cast<unsigned long>(approach));
    s.quotient_rank_log_p = e;
    s.rapid_index_log_p = e;
    s.ratio = Rational(1);
    if (e <= kMaxWrittenExponent) {
      // d_p(H_k) >= def_p(H_k) = 1 + p^(n + E_k) eps.
      const Rational top =
          1 + pow(Rational(prime),
                  e.get_ui() + static_cast<unsigned long>(approach)) *
                  eps;
      s.rank_surplus = ceil(top) - quotient;
      if (*s.rank_surplus < 0) {
        throw std::logic_error("rapid group exceeds the available rank");
      }
    }
    cert.steps.push_back(std::move(s));
    cert.infimum = Rational(1);
    e = next;
  }
  return cert;
}

RankGradientBound rank_gradient_bound(const Presentation& p,
                                      std::uint64_t prime) {
  check_prime(prime);
  const ExtendedRational d = p_deficiency(p, prime);
  if (!d.is_finite()) {
    throw Error(ErrorCode::InfinitePresentation,
                "def_" + std::to_string(prime) + " is -inf");
  }
  RankGradientBound out;
  out.bound = d.value() - 1;
  out.positive = out.bound > 0;
  return out;
}

}  // namespace pdef
