#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdef/presentation.hpp"

namespace pdef {

// Upper-triangular Coxeter labels m_ij, i < j. nullopt is infinity.
class CoxeterMatrix {
 public:
  using Label = std::optional<std::uint64_t>;

  // `labels` in row-major upper-triangle order: m_12, m_13, ..., m_23, ...
  CoxeterMatrix(std::size_t n, std::vector<Label> labels);

  // Number of generators n for which the label count is n(n-1)/2.
  static CoxeterMatrix from_labels(std::vector<Label> labels);
  // "3,3,inf" style list.
  static CoxeterMatrix parse(std::string_view text);
  static CoxeterMatrix uniform(std::size_t n, Label label);

  std::size_t size() const noexcept { return n_; }
  // 0-based i < j.
  const Label& label(std::size_t i, std::size_t j) const;
  const std::vector<Label>& labels() const noexcept { return labels_; }

 private:
  std::size_t n_;
  std::vector<Label> labels_;
};

std::string to_string(const CoxeterMatrix::Label& label);

// <x1..xn | xi^2, (xi xj)^mij>, infinite labels omitted.
Presentation coxeter_presentation(const CoxeterMatrix& m);

// Closed form <a1..a(n-1) | a(i-1)^m1i, (a(i-1) a(j-1)^-1)^mij>.
Presentation p_coxeter_closed_form(const CoxeterMatrix& m);

// Index-2 orientation-preserving subgroup computed by Reidemeister-Schreier
// with transversal {e, x1}, checked against the closed form. Throws
// LabelNotPPower.
Presentation p_coxeter_subgroup(const CoxeterMatrix& m, std::uint64_t p);

// Full rewriting output before the comparison with the closed form; exposed
// for tests.
struct CoxeterRewrite {
  Presentation subgroup;
  // For each source relator, whether the x1-conjugate copy is conjugate to
  // the kept copy or its inverse.
  bool conjugate_copies_consistent = true;
};
CoxeterRewrite rewrite_orientation_subgroup(const CoxeterMatrix& m);

Presentation s_n_p(std::size_t n, std::uint64_t p);
Presentation gupta_sidki_approx(std::uint64_t p);
Presentation problem_group(std::uint64_t p);

struct RelatorImageCheck {
  std::size_t source_relator = 0;
  Word image;
  bool trivial = false;
  // Index of a target relator whose power (up to conjugacy and inversion)
  // equals the image.
  std::optional<std::size_t> target_relator;
};

struct SurjectionSpec {
  Presentation source;
  Presentation target;
  std::vector<Word> images;  // one per source generator
  std::vector<RelatorImageCheck> relator_checks;
  bool abelianization_surjective = false;
  std::uint64_t prime = 2;

  bool verified() const;
};

// Evaluates the relator images and the mod-p abelianization map; does not
// throw on failure.
SurjectionSpec check_surjection(const Presentation& source,
                                const Presentation& target,
                                std::vector<Word> images, std::uint64_t p);

enum class SurjectionKind { ReduceLabels, DropGenerator };

// reduce_labels: p-Coxeter subgroup with p-power labels onto S_n(p).
// Throws NotVerifiable when the syntactic check fails.
SurjectionSpec reduce_labels_surjection(const CoxeterMatrix& source,
                                        std::uint64_t p);
// S_(n+1)(p) onto S_n(p), sending the last generator to 1.
SurjectionSpec drop_generator_surjection(std::size_t n, std::uint64_t p);

}  // namespace pdef
