#include "dhg/restriction.hpp"

#include <stdexcept>
#include <utility>

namespace dhg {

RestrictedGame::RestrictedGame(DirectedHypergraph h, TUGame base, Semantics sem)
    : h_(std::move(h)), base_(std::move(base)), sem_(sem), solver_(h_, sem) {
  if (h_.player_count() != base_.player_count())
    throw std::invalid_argument("hypergraph and game disagree on player count");
}

Rational RestrictedGame::restricted_worth(Coalition s) const {
  if (!s.subset_of(h_.ground())) throw std::out_of_range("coalition out of range");
  if (!cache_.empty()) return cache_[static_cast<std::size_t>(s.mask())];
  std::vector<std::uint64_t> blocks;
  solver_.blocks_of(s.mask(), blocks);
  Rational r;
  for (std::uint64_t b : blocks) r += base_.worth(Coalition::from_mask(b));
  return r;
}

void RestrictedGame::build_cache() {
  if (!cache_.empty()) return;
  const int n = player_count();
  if (n > kDenseTableLimit) throw std::invalid_argument("cannot cache beyond 16 players");
  const std::uint64_t full = h_.ground().mask();
  std::vector<Rational> base_table = base_.materialize();
  std::vector<Rational> table(std::size_t{1} << n);
  std::vector<std::uint64_t> blocks;
  for (std::uint64_t s = 1; s <= full; ++s) {
    blocks.clear();
    solver_.blocks_of(s, blocks);
    Rational& r = table[static_cast<std::size_t>(s)];
    for (std::uint64_t b : blocks) r += base_table[static_cast<std::size_t>(b)];
    if (s == full) break;
  }
  cache_ = std::move(table);
}

const std::vector<Rational>& RestrictedGame::cache() const {
  if (cache_.empty()) throw std::logic_error("restricted worth cache not built");
  return cache_;
}

DecompositionResult decomposition_check(const RestrictedGame& rg) {
  const std::vector<Rational>& table = rg.cache();
  const Partition blocks = strong_components(rg.hypergraph(), rg.semantics());
  const std::uint64_t full = rg.hypergraph().ground().mask();
  for (std::uint64_t s = 1; s <= full; ++s) {
    Rational sum;
    for (const Coalition& t : blocks.blocks)
      sum += table[static_cast<std::size_t>(s & t.mask())];
    if (sum != table[static_cast<std::size_t>(s)]) {
      DecompositionResult r;
      r.holds = false;
      r.failing = Coalition::from_mask(s);
      r.lhs = table[static_cast<std::size_t>(s)];
      r.rhs = std::move(sum);
      return r;
    }
    if (s == full) break;
  }
  return {};
}

}  // namespace dhg
