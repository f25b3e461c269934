#include "pdef/rewriting.hpp"

#include <set>

#include "pdef/error.hpp"

namespace pdef {

namespace {

std::int64_t symmetric_residue(std::uint64_t n, std::uint64_t p) {
  const std::uint64_t r = n % p;
  if (2 * r < p) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(r) - static_cast<std::int64_t>(p);
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

Word t_power(std::uint32_t t, std::int64_t e) {
  return Word::generator(t, e < 0 ? -1 : 1).pow(e < 0 ? -e : e);
}

void check_theta(const Presentation& p, const CpHom& theta) {
  if (!is_prime(theta.prime)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(theta.prime) + " is not prime");
  }
  if (theta.values.size() != p.rank()) {
    throw Error(ErrorCode::InvalidArgument,
                "theta has " + std::to_string(theta.values.size()) +
                    " values for " + std::to_string(p.rank()) + " generators");
  }
  if (theta.is_zero()) throw Error(ErrorCode::ThetaZero, "theta is zero");
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (theta(p.relators()[i].word()) != 0) {
      throw Error(ErrorCode::ThetaNotAnnihilating,
                  "theta does not kill relator " + std::to_string(i + 1));
    }
  }
}

Alphabet kernel_alphabet(const NormalizedPresentation& n, std::uint64_t prime) {
  const Alphabet& a = n.presentation.alphabet();
  std::vector<std::string> names{"s"};
  std::set<std::string> used{"s"};
  for (std::uint32_t i = 0; i < n.t_index(); ++i) {
    for (std::uint64_t j = 0; j < prime; ++j) {
      std::string name = a.name(i) + "_" + std::to_string(j);
      while (!used.insert(name).second) name += "_";
      names.push_back(std::move(name));
    }
  }
  return Alphabet(std::move(names));
}

std::optional<TailBudget> kernel_tail(const Presentation& p,
                                      std::uint64_t prime) {
  if (!p.tail()) return std::nullopt;
  TailBudget t = *p.tail();
  t.sigma *= prime;
  t.p_powers_only = false;
  return t;
}

}  // namespace

std::string_view to_string(Branch b) noexcept {
  return b == Branch::Split ? "split" : "collapsed";
}

NormalizedPresentation normalize_for_theta(const Presentation& p,
                                           const CpHom& theta) {
  check_theta(p, theta);
  const std::uint64_t prime = theta.prime;
  const std::size_t d = p.rank();

  std::uint32_t t_src = 0;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (theta.values[i] % prime != 0) t_src = i;
  }
  const std::uint64_t scale = mod_inverse(theta.values[t_src] % prime, prime);

  NormalizedPresentation n;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (i == t_src) continue;
    n.source_index.push_back(i);
    names.push_back(p.alphabet().name(i));
  }
  n.source_index.push_back(t_src);
  names.push_back(p.alphabet().name(t_src));
  const auto t = static_cast<std::uint32_t>(d - 1);

  n.substitution.resize(d);
  n.inverse_substitution.resize(d);
  for (std::uint32_t j = 0; j < d; ++j) {
    const std::uint32_t src = n.source_index[j];
    if (j == t) {
      n.substitution[src] = Word::generator(t);
      n.inverse_substitution[j] = Word::generator(src);
      continue;
    }
    const std::uint64_t value =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(
                                        theta.values[src] % prime) *
                                    scale) %
                                   prime);
    const std::int64_t c = symmetric_residue(value, prime);
    n.substitution[src] = multiply(Word::generator(j), t_power(t, c));
    n.inverse_substitution[j] =
        multiply(Word::generator(src), t_power(t_src, -c));
  }

  std::vector<Word> relators;
  for (const auto& r : p.relators()) {
    relators.push_back(substitute(r.word(), n.substitution));
  }
  n.presentation = Presentation(Alphabet(std::move(names)),
                                std::move(relators), p.tail());
  n.theta = CpHom{prime, std::vector<std::uint64_t>(d, 0)};
  n.theta.values[t] = 1;
  return n;
}

std::uint32_t kernel_s_index() { return 0; }

std::uint32_t kernel_generator_index(std::uint32_t source_gen,
                                     std::uint64_t conjugating_power,
                                     std::uint64_t prime) {
  return static_cast<std::uint32_t>(1 + source_gen * prime +
                                    conjugating_power);
}

Word rewrite_in_kernel(const Word& w, const NormalizedPresentation& n) {
  const std::uint64_t p = n.theta.prime;
  const std::uint32_t t = n.t_index();
  std::vector<Letter> out;
  std::uint64_t state = 0;
  for (const Letter& l : w) {
    if (l.gen > t) {
      throw Error(ErrorCode::AlphabetMismatch, "letter outside the alphabet");
    }
    if (l.gen != t) {
      out.push_back(Letter{kernel_generator_index(l.gen, state, p), l.sign});
    } else if (l.sign > 0) {
      if (state == p - 1) {
        out.push_back(Letter{kernel_s_index(), 1});
        state = 0;
      } else {
        ++state;
      }
    } else {
      if (state == 0) {
        out.push_back(Letter{kernel_s_index(), -1});
        state = p - 1;
      } else {
        --state;
      }
    }
  }
  if (state != 0) {
    throw Error(ErrorCode::NotInKernel, "word does not lie in ker theta");
  }
  return Word(out);
}

Word lift_from_kernel(const Word& w, const NormalizedPresentation& n) {
  const std::uint64_t p = n.theta.prime;
  const std::uint32_t t = n.t_index();
  std::vector<Word> images;
  images.push_back(t_power(t, static_cast<std::int64_t>(p)));
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      images.push_back(conjugate(t_power(t, static_cast<std::int64_t>(j)),
                                 Word::generator(i)));
    }
  }
  return substitute(w, images);
}

Rational KernelPresentation::recorded_p_deficiency() const {
  Rational result(static_cast<long>(presentation.rank()));
  for (const auto& pr : provenance) {
    result -= Rational(1, pow(Integer(prime), pr.recorded_valuation));
  }
  if (presentation.tail()) result -= presentation.tail()->sigma;
  return result;
}

KernelPresentation reidemeister_schreier_cyclic(const Presentation& p,
                                                const CpHom& theta) {
  KernelPresentation k;
  k.source = normalize_for_theta(p, theta);
  k.prime = theta.prime;
  const std::uint32_t t = k.source.t_index();
  std::vector<Word> relators;
  const auto& src = k.source.presentation.relators();
  for (std::size_t r = 0; r < src.size(); ++r) {
    for (std::uint64_t j = 0; j < k.prime; ++j) {
      Word c = conjugate(t_power(t, static_cast<std::int64_t>(j)), src[r].word());
      Word rewritten = rewrite_in_kernel(c, k.source);
      k.provenance.push_back(RelatorProvenance{
          r, j, Branch::Split, nu_p(rewritten, k.prime)});
      relators.push_back(std::move(rewritten));
    }
  }
  k.presentation = Presentation(kernel_alphabet(k.source, k.prime),
                                std::move(relators), kernel_tail(p, k.prime));
  return k;
}

KernelPresentation puchta_rewrite(const Presentation& p, const CpHom& theta) {
  KernelPresentation k;
  k.source = normalize_for_theta(p, theta);
  k.prime = theta.prime;
  const std::uint64_t prime = k.prime;
  const std::uint32_t t = k.source.t_index();
  std::vector<Word> relators;
  const auto& src = k.source.presentation.relators();
  for (std::size_t r = 0; r < src.size(); ++r) {
    const unsigned kv = src[r].nu_p(prime);
    const Word root = src[r].p_power_root(prime);
    const auto exponent = static_cast<std::int64_t>(
        pow(Integer(prime), kv).get_ui());
    if (kv == 0) {
      for (std::uint64_t j = 0; j < prime; ++j) {
        Word c = conjugate(t_power(t, static_cast<std::int64_t>(j)),
                           src[r].word());
        relators.push_back(rewrite_in_kernel(c, k.source));
        k.provenance.push_back(RelatorProvenance{r, j, Branch::Split, 0});
      }
    } else if (k.source.theta(root) == 0) {
      for (std::uint64_t j = 0; j < prime; ++j) {
        Word c = conjugate(t_power(t, static_cast<std::int64_t>(j)), root);
        relators.push_back(rewrite_in_kernel(c, k.source).pow(exponent));
        k.provenance.push_back(RelatorProvenance{r, j, Branch::Split, kv});
      }
    } else {
      Word base = rewrite_in_kernel(root.pow(static_cast<std::int64_t>(prime)),
                                    k.source);
      relators.push_back(base.pow(exponent / static_cast<std::int64_t>(prime)));
      k.provenance.push_back(RelatorProvenance{r, 0, Branch::Collapsed, kv - 1});
    }
  }
  k.presentation = Presentation(kernel_alphabet(k.source, prime),
                                std::move(relators), kernel_tail(p, prime));

  const auto before = p_deficiency(p, prime);
  if (before.is_finite()) {
    const Rational expected = Rational(static_cast<long>(prime)) *
                                  (before.value() - 1) + 1;
    if (k.recorded_p_deficiency() != expected) {
      throw std::logic_error("puchta_rewrite: p-deficiency not multiplicative");
    }
  }
  return k;
}

CpHom restrict_hom(const KernelPresentation& k, const CpHom& phi) {
  const auto& n = k.source;
  if (phi.prime != k.prime) {
    throw Error(ErrorCode::InvalidArgument, "prime mismatch");
  }
  if (phi.values.size() != n.source_index.size()) {
    throw Error(ErrorCode::InvalidArgument, "homomorphism has the wrong rank");
  }
  CpHom out{k.prime, std::vector<std::uint64_t>(k.presentation.rank(), 0)};
  for (std::uint32_t i = 0; i < n.t_index(); ++i) {
    const std::uint64_t v = phi(n.inverse_substitution[i]);
    for (std::uint64_t j = 0; j < k.prime; ++j) {
      out.values[kernel_generator_index(i, j, k.prime)] = v;
    }
  }
  out.values[kernel_s_index()] = 0;
  return out;
}

}  // namespace pdef
