#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pdef/presentation.hpp"

namespace pdef {

// A presentation rewritten so that theta sends every generator except the
// last one (t) to 0 and t to 1.
struct NormalizedPresentation {
  Presentation presentation;
  CpHom theta;  // normalized: (0, ..., 0, 1)
  // Source generator i expressed in the normalized alphabet.
  std::vector<Word> substitution;
  // Normalized generator j expressed in the source alphabet.
  std::vector<Word> inverse_substitution;
  // Position of each normalized generator in the source alphabet.
  std::vector<std::uint32_t> source_index;

  std::uint32_t t_index() const {
    return static_cast<std::uint32_t>(presentation.rank() - 1);
  }
};

// Throws ThetaZero, ThetaNotAnnihilating.
NormalizedPresentation normalize_for_theta(const Presentation& p,
                                           const CpHom& theta);

enum class Branch { Split, Collapsed };

std::string_view to_string(Branch b) noexcept;

struct RelatorProvenance {
  std::size_t source_relator = 0;
  std::uint64_t conjugating_power = 0;
  Branch branch = Branch::Split;
  // Guaranteed lower bound on nu_p of the output relator.
  unsigned recorded_valuation = 0;

  friend bool operator==(const RelatorProvenance&,
                         const RelatorProvenance&) = default;
};

// Presentation of ker(theta) on generators s = t^p and
// x_{i,j} = t^j x_i t^-j, in that order (s first, then i-major, j-minor).
struct KernelPresentation {
  NormalizedPresentation source;
  Presentation presentation;
  std::vector<RelatorProvenance> provenance;
  std::uint64_t prime = 2;

  // sum p^-recorded_valuation, i.e. the certified p-deficiency.
  Rational recorded_p_deficiency() const;
};

std::uint32_t kernel_s_index();
std::uint32_t kernel_generator_index(std::uint32_t source_gen,
                                     std::uint64_t conjugating_power,
                                     std::uint64_t prime);

// Reidemeister-Schreier with transversal {1, t, ..., t^(p-1)} for a word of
// the normalized alphabet. Throws NotInKernel.
Word rewrite_in_kernel(const Word& w, const NormalizedPresentation& n);

// Inverse of rewrite_in_kernel: s -> t^p, x_{i,j} -> t^j x_i t^-j.
Word lift_from_kernel(const Word& w, const NormalizedPresentation& n);

// All p conjugates of every relator, rewritten. def - 1 is multiplied by p.
KernelPresentation reidemeister_schreier_cyclic(const Presentation& p,
                                                const CpHom& theta);

// Rewriting that keeps p-power structure: a relator w^(p^k) with theta(w) != 0
// contributes a single relator (w^p)^(p^(k-1)). def_p - 1 is multiplied by p
// exactly; the result is checked before returning.
KernelPresentation puchta_rewrite(const Presentation& p, const CpHom& theta);

// Transports a homomorphism of the source presentation to the kernel
// presentation (its restriction to ker theta).
CpHom restrict_hom(const KernelPresentation& k, const CpHom& phi);

}  // namespace pdef
