#include "pdef/corpus.hpp"

#include <random>
#include <string>

namespace pdef {

namespace {

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t length) {
  std::vector<Letter> letters;
  while (letters.size() < length) {
    Letter l{static_cast<std::uint32_t>(rng() % rank),
             static_cast<std::int8_t>(rng() % 2 == 0 ? 1 : -1)};
    if (!letters.empty() && letters.back().cancels(l)) continue;
    letters.push_back(l);
  }
  return Word(letters);
}

}  // namespace

std::vector<Presentation> random_corpus(const CorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Presentation> out;
  const std::uint64_t primes[] = {2, 3, 5};
  while (out.size() < options.count) {
    const std::size_t d = 1 + rng() % options.max_rank;
    const std::size_t m = rng() % (options.max_relators + 1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<Word> relators;
    for (std::size_t i = 0; i < m; ++i) {
      Word r = random_word(rng, d, 1 + rng() % options.max_length);
      if (rng() % 3 == 0) {
        const std::uint64_t q =
            options.prime ? *options.prime : primes[rng() % 3];
        std::size_t e = q;
        if (rng() % 4 == 0) e *= q;
        std::size_t base = 1 + rng() % std::max<std::size_t>(1, options.max_length / e);
        if (base * e <= options.max_length) {
          r = random_word(rng, d, base).pow(static_cast<std::int64_t>(e));
        }
      }
      relators.push_back(std::move(r));
    }
    Presentation p(Alphabet(std::move(names)), std::move(relators));
    if (options.prime && p_rank(p, *options.prime) == 0) continue;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pdef
