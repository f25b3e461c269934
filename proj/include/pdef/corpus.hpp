#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pdef/presentation.hpp"

namespace pdef {

struct CorpusOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_rank = 3;
  std::size_t max_relators = 4;
  std::size_t max_length = 10;
  // When set, draws with d_p = 0 for this prime are rejected.
  std::optional<std::uint64_t> prime;
};

// Seeded random finite presentations over generators x1..xd. Some relators
// are drawn as proper powers so that nu_p is exercised.
std::vector<Presentation> random_corpus(const CorpusOptions& options);

}  // namespace pdef
