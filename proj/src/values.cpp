#include "dhg/values.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "dhg/rng.hpp"

namespace dhg {

Allocation shapley_from_table(int n, const std::vector<Rational>& worth) {
  if (n < 1 || n > kDenseTableLimit) throw std::invalid_argument("player count must be in 1..16");
  if (worth.size() != (std::size_t{1} << n))
    throw std::invalid_argument("worth table needs exactly 2^n entries");

  // Group marginal contributions by |S| first, then apply the size weight
  // s!(n-s-1)!/n! once per bucket. One rational division total per player.
  std::vector<std::vector<Rational>> acc(
      static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  const std::uint64_t fullmask = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0;; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    for (std::uint64_t rest = fullmask & ~s; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const std::uint64_t bit = std::uint64_t{1} << i;
      acc[static_cast<std::size_t>(i)][size] +=
          worth[static_cast<std::size_t>(s | bit)] - worth[static_cast<std::size_t>(s)];
    }
    if (s == fullmask) break;
  }

  std::vector<mpz_class> weight(static_cast<std::size_t>(n));
  mpz_class fact_n;
  mpz_fac_ui(fact_n.get_mpz_t(), static_cast<unsigned long>(n));
  for (int s = 0; s < n; ++s) {
    mpz_class a, b;
    mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(s));
    mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n - s - 1));
    weight[static_cast<std::size_t>(s)] = a * b;
  }

  Allocation out;
  out.values.resize(static_cast<std::size_t>(n));
  const Rational inv_fact(mpq_class(mpz_class(1), fact_n));
  for (int i = 0; i < n; ++i) {
    Rational sum;
    for (int s = 0; s < n; ++s)
      sum += Rational(weight[static_cast<std::size_t>(s)]) *
             acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
    out.values[static_cast<std::size_t>(i)] = sum * inv_fact;
  }
  return out;
}

Allocation shapley(const TUGame& g) {
  return shapley_from_table(g.player_count(), g.materialize());
}

Allocation shapley(const RestrictedGame& rg) {
  return shapley_from_table(rg.player_count(), rg.cache());
}

Allocation myerson(const DirectedHypergraph& h, const TUGame& g, Semantics sem) {
  RestrictedGame rg(h, g, sem);
  rg.build_cache();
  return shapley(rg);
}

namespace {

McEstimate mc_core(int n, const std::function<Rational(std::uint64_t)>& worth_of,
                   std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count must be in 1..64");
  if (samples == 0) throw std::invalid_argument("need at least one sample");

  std::mt19937_64 gen(seed);
  std::vector<Rational> acc(static_cast<std::size_t>(n));
  std::vector<int> perm;
  for (std::uint64_t k = 0; k < samples; ++k) {
    random_permutation(gen, n, perm);
    Rational prev;
    std::uint64_t mask = 0;
    for (int idx = 0; idx < n; ++idx) {
      const int player = perm[static_cast<std::size_t>(idx)];
      mask |= std::uint64_t{1} << (player - 1);
      Rational cur = worth_of(mask);
      acc[static_cast<std::size_t>(player - 1)] += cur - prev;
      prev = std::move(cur);
    }
  }

  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.values.resize(static_cast<std::size_t>(n));
  const Rational inv(1, static_cast<long>(samples));
  for (int i = 0; i < n; ++i)
    out.values[static_cast<std::size_t>(i)] =
        (acc[static_cast<std::size_t>(i)] * inv).to_double();
  return out;
}

}  // namespace

McEstimate shapley_monte_carlo(const TUGame& g, std::uint64_t samples, std::uint64_t seed) {
  const int n = g.player_count();
  if (n <= kDenseTableLimit) {
    const std::vector<Rational> table = g.materialize();
    return mc_core(
        n, [&table](std::uint64_t m) { return table[static_cast<std::size_t>(m)]; }, samples,
        seed);
  }
  return mc_core(
      n, [&g](std::uint64_t m) { return g.worth(Coalition::from_mask(m)); }, samples, seed);
}

McEstimate myerson_monte_carlo(const DirectedHypergraph& h, const TUGame& g, Semantics sem,
                               std::uint64_t samples, std::uint64_t seed) {
  if (h.player_count() != g.player_count())
    throw std::invalid_argument("hypergraph and game disagree on player count");
  const int n = g.player_count();
  const ComponentSolver solver(h, sem);
  std::vector<std::uint64_t> blocks;

  if (n <= kDenseTableLimit) {
    const std::vector<Rational> table = g.materialize();
    return mc_core(
        n,
        [&](std::uint64_t m) {
          blocks.clear();
          solver.blocks_of(m, blocks);
          Rational r;
          for (std::uint64_t b : blocks) r += table[static_cast<std::size_t>(b)];
          return r;
        },
        samples, seed);
  }
  return mc_core(
      n,
      [&](std::uint64_t m) {
        blocks.clear();
        solver.blocks_of(m, blocks);
        Rational r;
        for (std::uint64_t b : blocks) r += g.worth(Coalition::from_mask(b));
        return r;
      },
      samples, seed);
}

}  // namespace dhg
