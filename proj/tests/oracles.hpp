#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <unordered_set>
#include <vector>

#include "pdef/magnus.hpp"
#include "pdef/words.hpp"

namespace oracle {

using namespace pdef;

// For every word reachable as v^(p^k) with v in the pool, the largest such k.
inline std::map<Word, unsigned> brute_roots(std::uint64_t p,
                                     const std::vector<Word>& pool,
                                     std::size_t max_length) {
  std::map<Word, unsigned> best;
  for (const auto& v : pool) {
    std::uint64_t e = p;
    for (unsigned k = 1;; ++k, e *= p) {
      Word power = v.pow(static_cast<std::int64_t>(e));
      if (power.length() > max_length) break;
      auto& slot = best[power];
      slot = std::max(slot, k);
    }
  }
  return best;
}

// Units of F_2<X,Y> modulo monomials of degree >= 5. Layer a holds the 2^a
// monomials of degree a as a bitmask; a monomial is a binary string with
// X = 0 and Y = 1.
struct Unit {
  std::array<std::uint32_t, 5> layer{1, 0, 0, 0, 0};
  friend bool operator==(const Unit&, const Unit&) = default;
};

struct UnitHash {
  std::size_t operator()(const Unit& u) const noexcept {
    std::uint64_t h = 0;
    for (auto l : u.layer) h = h * 0x9E3779B97F4A7C15ULL + l;
    return static_cast<std::size_t>(h);
  }
};

// Bit v of `mask` (a layer of degree b) moved to bit (u << b) | v.
inline std::uint32_t shift_layer(std::uint32_t mask, std::uint32_t u, unsigned b) {
  return mask << (u << b);
}

inline Unit mul(const Unit& a, const Unit& b) {
  Unit c;
  c.layer = {0, 0, 0, 0, 0};
  for (unsigned da = 0; da <= 4; ++da) {
    for (std::uint32_t u = 0; u < (1U << da); ++u) {
      if (!((a.layer[da] >> u) & 1U)) continue;
      for (unsigned db = 0; da + db <= 4; ++db) {
        c.layer[da + db] ^= shift_layer(b.layer[db], u, db);
      }
    }
  }
  return c;
}

inline Unit inverse(const Unit& a) {
  // a = 1 + n with n nilpotent; a^-1 = 1 + n + n^2 + n^3 + n^4 over F_2.
  Unit n = a;
  n.layer[0] = 0;
  Unit result;
  Unit power;
  for (int k = 1; k <= 4; ++k) {
    power = mul(power, n);
    for (int i = 0; i < 5; ++i) result.layer[i] ^= power.layer[i];
  }
  return result;
}

inline Unit commutator(const Unit& a, const Unit& b) {
  return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

inline Unit gen_x() {
  Unit u;
  u.layer[1] = 0b01;
  return u;
}
inline Unit gen_y() {
  Unit u;
  u.layer[1] = 0b10;
  return u;
}

using UnitSet = std::unordered_set<Unit, UnitHash>;

// Normal closure in <X, Y> of `gens`.
inline UnitSet normal_closure(const std::vector<Unit>& candidates) {
  const Unit X = gen_x(), Y = gen_y();
  std::vector<Unit> gens;
  UnitSet h{Unit{}};
  auto close = [&]() {
    std::vector<Unit> frontier(h.begin(), h.end());
    while (!frontier.empty()) {
      std::vector<Unit> next;
      for (const auto& e : frontier) {
        for (const auto& g : gens) {
          Unit p = mul(e, g);
          if (h.insert(p).second) next.push_back(p);
        }
      }
      frontier = std::move(next);
    }
  };
  std::vector<Unit> pending = candidates;
  while (!pending.empty()) {
    Unit g = pending.back();
    pending.pop_back();
    if (h.count(g)) continue;
    gens.push_back(g);
    close();
    pending.push_back(mul(mul(X, g), inverse(X)));
    pending.push_back(mul(mul(Y, g), inverse(Y)));
  }
  return h;
}

struct Oracle {
  // level[i] is the i-th term of the filtration, i = 1..5.
  std::array<UnitSet, 6> level;

  Oracle() {
    level[1] = normal_closure({gen_x(), gen_y()});
    for (int i = 2; i <= 5; ++i) {
      std::vector<Unit> gens;
      for (const auto& a : level[i - 1]) {
        gens.push_back(commutator(a, gen_x()));
        gens.push_back(commutator(a, gen_y()));
      }
      for (const auto& a : level[(i + 1) / 2]) gens.push_back(mul(a, a));
      level[i] = normal_closure(gens);
    }
  }

  Unit image(const Word& word) const {
    Unit u;
    const Unit gens[2] = {gen_x(), gen_y()};
    for (const Letter& l : word) {
      u = mul(u, l.sign > 0 ? gens[l.gen] : inverse(gens[l.gen]));
    }
    return u;
  }

  DegreeResult degree(const Word& word) const {
    const Unit u = image(word);
    int best = 1;
    for (int i = 2; i <= 5; ++i) {
      if (level[i].count(u)) best = i;
    }
    return best == 5 ? DegreeResult::AtLeast(5) : DegreeResult::Exact(best);
  }
};

}  // namespace oracle
