#include "pdef/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "pdef/error.hpp"

namespace pdef {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
}

std::vector<std::string> numbered(const char* stem, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

bool is_p_power(std::uint64_t m, std::uint64_t p) {
  if (m < p) return false;
  while (m % p == 0) m /= p;
  return m == 1;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    const Word& img = images.at(l.gen);
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        out.push_back(it->inverse());
      }
    }
  }
  return Word(out);
}

// Schreier generators for the transversal {e, x1}: gamma(e, x_i) for i >= 2
// take indices 0..n-2, gamma(x1, x_i) for i >= 1 take n-1..2n-2.
class IndexTwoRewriter {
 public:
  explicit IndexTwoRewriter(std::size_t n) : n_(n) {}

  std::size_t generator_count() const { return 2 * n_ - 1; }

  Word rewrite(const Word& w, int coset) const {
    std::vector<Letter> out;
    for (const Letter& l : w) {
      if (l.sign > 0) {
        emit(out, coset, l.gen, 1);
        coset = 1 - coset;
      } else {
        coset = 1 - coset;
        emit(out, coset, l.gen, -1);
      }
    }
    if (coset != 0 && coset != 1) throw std::logic_error("bad coset");
    return Word(out);
  }

 private:
  void emit(std::vector<Letter>& out, int coset, std::uint32_t gen,
            std::int8_t sign) const {
    if (coset == 0) {
      if (gen == 0) return;
      out.push_back(Letter{gen - 1, sign});
    } else {
      out.push_back(Letter{static_cast<std::uint32_t>(n_ - 1 + gen), sign});
    }
  }

  std::size_t n_;
};

Word positive_if_single_generator(const Word& w) {
  if (w.is_identity()) return w;
  const std::uint32_t g = w[0].gen;
  const bool single = std::all_of(w.begin(), w.end(),
                                  [&](const Letter& l) { return l.gen == g; });
  if (single && w[0].sign < 0) return w.inverse();
  return w;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::size_t n, std::vector<Label> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "a Coxeter matrix needs n >= 2");
  }
  if (labels_.size() != n * (n - 1) / 2) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(n * (n - 1) / 2) + " labels, got " +
                    std::to_string(labels_.size()));
  }
  for (const auto& l : labels_) {
    if (l && *l < 2) {
      throw Error(ErrorCode::InvalidArgument, "Coxeter labels must be >= 2");
    }
  }
}

CoxeterMatrix CoxeterMatrix::from_labels(std::vector<Label> labels) {
  std::size_t n = 2;
  while (n * (n - 1) / 2 < labels.size()) ++n;
  if (n * (n - 1) / 2 != labels.size()) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(labels.size()) +
                    " labels do not fill an upper triangle");
  }
  return CoxeterMatrix(n, std::move(labels));
}

CoxeterMatrix CoxeterMatrix::parse(std::string_view text) {
  std::vector<Label> labels;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item == "inf" || item == "oo" || item == "infinity") {
      labels.emplace_back(std::nullopt);
    } else {
      if (item.empty() ||
          !std::all_of(item.begin(), item.end(),
                       [](unsigned char c) { return std::isdigit(c); }) ||
          item.size() > 18) {
        throw Error(ErrorCode::InvalidArgument, "bad Coxeter label '" + item + "'");
      }
      labels.emplace_back(std::stoull(item));
    }
    start = end + 1;
  }
  return from_labels(std::move(labels));
}

CoxeterMatrix CoxeterMatrix::uniform(std::size_t n, Label label) {
  return CoxeterMatrix(n, std::vector<Label>(n * (n - 1) / 2, label));
}

const CoxeterMatrix::Label& CoxeterMatrix::label(std::size_t i,
                                                 std::size_t j) const {
  if (i >= j || j >= n_) {
    throw Error(ErrorCode::InvalidArgument, "label index out of range");
  }
  // Row i starts after sum_{r<i} (n-1-r) entries.
  const std::size_t row_start = i * (2 * n_ - i - 1) / 2;
  return labels_[row_start + (j - i - 1)];
}

std::string to_string(const CoxeterMatrix::Label& label) {
  return label ? std::to_string(*label) : "inf";
}

Presentation coxeter_presentation(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Word> relators;
  for (std::uint32_t i = 0; i < n; ++i) relators.push_back(Word{gen(i), gen(i)});
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (const auto& l = m.label(i, j)) {
        relators.push_back(Word{gen(i), gen(j)}.pow(static_cast<std::int64_t>(*l)));
      }
    }
  }
  return Presentation(Alphabet(numbered("x", n)), std::move(relators));
}

Presentation p_coxeter_closed_form(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Word> relators;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (const auto& l = m.label(0, i)) {
      relators.push_back(Word::generator(i - 1).pow(static_cast<std::int64_t>(*l)));
    }
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (const auto& l = m.label(i, j)) {
        relators.push_back(
            Word{gen(i - 1), inv(j - 1)}.pow(static_cast<std::int64_t>(*l)));
      }
    }
  }
  return Presentation(Alphabet(numbered("a", n - 1)), std::move(relators));
}

CoxeterRewrite rewrite_orientation_subgroup(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  const Presentation cox = coxeter_presentation(m);
  const IndexTwoRewriter rs(n);
  const std::size_t count = rs.generator_count();

  std::vector<Word> images;
  std::vector<bool> eliminated(count, false);
  for (std::uint32_t g = 0; g < count; ++g) images.push_back(Word::generator(g));

  // Tietze moves from the rewritten involution relators.
  for (std::size_t r = 0; r < n; ++r) {
    for (int coset = 0; coset < 2; ++coset) {
      Word w = substitute(rs.rewrite(cox.relators()[r].word(), coset), images);
      if (w.is_identity()) continue;
      if (w.length() == 1) {
        images[w[0].gen] = Word();
        eliminated[w[0].gen] = true;
      } else if (w.length() == 2) {
        std::size_t k = w[1].gen >= n - 1 ? 1 : 0;
        if (w[k].gen < n - 1) {
          throw std::logic_error("unexpected involution rewrite");
        }
        // w[k]^sign = other^-1 on the side it sits.
        const Letter other = w[1 - k];
        Word value = Word{other.inverse()};
        if (w[k].sign < 0) value = value.inverse();
        images[w[k].gen] = value;
        eliminated[w[k].gen] = true;
      } else {
        throw std::logic_error("unexpected involution rewrite");
      }
    }
  }
  for (std::size_t g = n - 1; g < count; ++g) {
    if (!eliminated[g]) throw std::logic_error("Schreier generator survived");
  }

  CoxeterRewrite out;
  std::vector<Word> kept;
  for (std::size_t r = n; r < cox.relators().size(); ++r) {
    const Word& source = cox.relators()[r].word();
    Word w = positive_if_single_generator(
        substitute(rs.rewrite(source, 0), images));
    if (w.is_identity()) continue;
    Word copy = substitute(rs.rewrite(source, 1), images);
    if (!are_conjugate(copy, w) && !are_conjugate(copy, w.inverse())) {
      out.conjugate_copies_consistent = false;
    }
    kept.push_back(std::move(w));
  }
  out.subgroup = Presentation(Alphabet(numbered("a", n - 1)), std::move(kept));
  return out;
}

Presentation p_coxeter_subgroup(const CoxeterMatrix& m, std::uint64_t p) {
  require_prime(p);
  if (p == 2) {
    throw Error(ErrorCode::InvalidArgument, "p-Coxeter subgroups need odd p");
  }
  for (const auto& l : m.labels()) {
    if (l && !is_p_power(*l, p)) {
      throw Error(ErrorCode::LabelNotPPower,
                  "label " + std::to_string(*l) + " is not a power of " +
                      std::to_string(p));
    }
  }
  CoxeterRewrite rw = rewrite_orientation_subgroup(m);
  if (!rw.conjugate_copies_consistent || !(rw.subgroup == p_coxeter_closed_form(m))) {
    throw std::logic_error("orientation subgroup rewrite disagrees with the closed form");
  }
  return rw.subgroup;
}

Presentation s_n_p(std::size_t n, std::uint64_t p) {
  require_prime(p);
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "S_n(p) needs n >= 2");
  return p_coxeter_closed_form(CoxeterMatrix::uniform(n, p));
}

Presentation gupta_sidki_approx(std::uint64_t p) {
  require_prime(p);
  if (p < 3) throw Error(ErrorCode::InvalidArgument, "needs an odd prime");
  const auto e = static_cast<std::int64_t>(p);
  std::vector<Word> relators{Word::generator(0).pow(e), Word::generator(1).pow(e)};
  for (std::int64_t i = 1; i <= (e - 1) / 2; ++i) {
    for (std::int64_t j = 1; j <= e - 1; ++j) {
      relators.push_back(
          multiply(Word::generator(0).pow(i), Word::generator(1).pow(j)).pow(e * e));
    }
  }
  return Presentation(Alphabet({"x", "y"}), std::move(relators));
}

Presentation problem_group(std::uint64_t p) {
  require_prime(p);
  if (p < 5) throw Error(ErrorCode::InvalidArgument, "needs p >= 5");
  const auto e = static_cast<std::int64_t>(p);
  std::vector<Word> relators{Word::generator(0).pow(e), Word::generator(1).pow(e)};
  for (std::int64_t i = 1; i <= e - 1; ++i) {
    for (std::int64_t j = 1; j <= e - 1; ++j) {
      relators.push_back(
          multiply(Word::generator(0).pow(i), Word::generator(1).pow(j)).pow(e));
    }
  }
  return Presentation(Alphabet({"x", "y"}), std::move(relators));
}

bool SurjectionSpec::verified() const {
  return abelianization_surjective &&
         std::all_of(relator_checks.begin(), relator_checks.end(),
                     [](const RelatorImageCheck& c) {
                       return c.trivial || c.target_relator.has_value();
                     });
}

SurjectionSpec check_surjection(const Presentation& source,
                                const Presentation& target,
                                std::vector<Word> images, std::uint64_t p) {
  require_prime(p);
  if (images.size() != source.rank()) {
    throw Error(ErrorCode::InvalidArgument, "one image per source generator");
  }
  for (const auto& img : images) target.alphabet().check(img);

  SurjectionSpec spec{source, target, std::move(images), {}, false, p};
  for (std::size_t r = 0; r < source.relators().size(); ++r) {
    RelatorImageCheck c;
    c.source_relator = r;
    c.image = substitute(source.relators()[r].word(), spec.images);
    c.trivial = c.image.is_identity();
    if (!c.trivial) {
      const auto d = primitive_decomposition(c.image);
      for (std::size_t t = 0; t < target.relators().size(); ++t) {
        const auto& tr = target.relators()[t];
        if (d.multiplicity % tr.multiplicity() != 0) continue;
        if (are_conjugate(d.root, tr.primitive_root()) ||
            are_conjugate(d.root, tr.primitive_root().inverse())) {
          c.target_relator = t;
          break;
        }
      }
    }
    spec.relator_checks.push_back(std::move(c));
  }

  FpMatrix stacked = relation_matrix_mod_p(target, p);
  for (const auto& img : spec.images) {
    std::vector<std::uint64_t> row(target.rank(), 0);
    for (std::uint32_t g = 0; g < target.rank(); ++g) {
      row[g] = mod_reduce(img.exponent_sum(g), p);
    }
    stacked.append_row(row);
  }
  spec.abelianization_surjective = stacked.rank() == target.rank();
  return spec;
}

SurjectionSpec reduce_labels_surjection(const CoxeterMatrix& source,
                                        std::uint64_t p) {
  Presentation from = p_coxeter_subgroup(source, p);
  Presentation to = s_n_p(source.size(), p);
  std::vector<Word> images;
  for (std::uint32_t g = 0; g < from.rank(); ++g) images.push_back(Word::generator(g));
  SurjectionSpec spec = check_surjection(from, to, std::move(images), p);
  if (!spec.verified()) {
    throw Error(ErrorCode::NotVerifiable, "label reduction map could not be verified");
  }
  return spec;
}

SurjectionSpec drop_generator_surjection(std::size_t n, std::uint64_t p) {
  Presentation from = s_n_p(n + 1, p);
  Presentation to = s_n_p(n, p);
  std::vector<Word> images;
  for (std::uint32_t g = 0; g + 1 < from.rank(); ++g) images.push_back(Word::generator(g));
  images.emplace_back();
  SurjectionSpec spec = check_surjection(from, to, std::move(images), p);
  if (!spec.verified()) {
    throw Error(ErrorCode::NotVerifiable, "generator drop map could not be verified");
  }
  return spec;
}

}  // namespace pdef
