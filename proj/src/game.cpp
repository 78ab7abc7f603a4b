#include "dhg/game.hpp"

#include <bit>
#include <stdexcept>

#include "dhg/rng.hpp"

namespace dhg {

namespace {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count must be in 1..64");
}

std::uint64_t full_mask(int n) { return Coalition::full(n).mask(); }

Rational int_power(std::uint64_t base, int k) {
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<unsigned long>(base);
  return Rational(r);
}

}  // namespace

TUGame TUGame::table(int n, std::vector<Rational> worth) {
  check_player_count(n);
  if (n > kDenseTableLimit) throw std::invalid_argument("table game limited to 16 players");
  if (worth.size() != (std::size_t{1} << n))
    throw std::invalid_argument("table game needs exactly 2^n entries");
  if (!worth[0].is_zero()) throw std::invalid_argument("worth of the empty coalition must be 0");
  return TUGame(n, TableGame{std::move(worth)});
}

TUGame TUGame::cardinality_power(int n, int k) {
  check_player_count(n);
  if (k < 1) throw std::invalid_argument("cardinality power needs k >= 1");
  return TUGame(n, CardinalityPowerGame{k});
}

TUGame TUGame::additive(std::vector<Rational> weights) {
  const int n = static_cast<int>(weights.size());
  check_player_count(n);
  return TUGame(n, AdditiveGame{std::move(weights)});
}

TUGame TUGame::unanimity(int n, Coalition required) {
  check_player_count(n);
  if (required.empty()) throw std::invalid_argument("unanimity coalition must be non-empty");
  if (!required.subset_of(Coalition::full(n)))
    throw std::invalid_argument("unanimity coalition out of range");
  return TUGame(n, UnanimityGame{required});
}

Rational TUGame::worth(Coalition s) const {
  if (!s.subset_of(Coalition::full(n_))) throw std::out_of_range("coalition out of range");
  struct Visitor {
    Coalition s;
    Rational operator()(const TableGame& g) const {
      return g.worth[static_cast<std::size_t>(s.mask())];
    }
    Rational operator()(const CardinalityPowerGame& g) const {
      return int_power(static_cast<std::uint64_t>(s.size()), g.k);
    }
    Rational operator()(const AdditiveGame& g) const {
      Rational r;
      for (std::uint64_t m = s.mask(); m; m &= m - 1)
        r += g.weights[static_cast<std::size_t>(std::countr_zero(m))];
      return r;
    }
    Rational operator()(const UnanimityGame& g) const {
      return g.required.subset_of(s) ? Rational(1) : Rational(0);
    }
    Rational operator()(const RandomSupermodularGame& g) const {
      Rational r;
      for (const auto& [c, t] : g.drawn)
        if (t.subset_of(s)) r += c;
      if (!g.eps.is_zero()) r += g.eps * int_power(static_cast<std::uint64_t>(s.size()), 2);
      return r;
    }
  };
  return std::visit(Visitor{s}, kind_);
}

std::vector<Rational> TUGame::materialize() const {
  if (n_ > kDenseTableLimit) throw std::invalid_argument("cannot materialize beyond 16 players");
  if (const auto* t = std::get_if<TableGame>(&kind_)) return t->worth;
  std::vector<Rational> out(std::size_t{1} << n_);
  for (std::uint64_t m = 0; m <= full_mask(n_); ++m) {
    out[static_cast<std::size_t>(m)] = worth(Coalition::from_mask(m));
    if (m == full_mask(n_)) break;
  }
  return out;
}

TUGame random_supermodular_game(int n, int terms, std::uint64_t seed, const Rational& eps) {
  check_player_count(n);
  if (n > 12) throw std::invalid_argument("random supermodular generator limited to 12 players");
  if (terms < 0) throw std::invalid_argument("terms must be >= 0");
  if (eps.sign() < 0) throw std::invalid_argument("eps must be >= 0");
  if (terms > 0 && n < 2)
    throw std::invalid_argument("unanimity terms need at least 2 players");
  RandomSupermodularGame g;
  g.terms = terms;
  g.seed = seed;
  g.eps = eps;
  std::mt19937_64 gen(seed);
  for (int j = 0; j < terms; ++j) {
    std::uint64_t t;
    do {
      t = 1 + bounded_uint64(gen, full_mask(n));  // non-empty
    } while (std::popcount(t) < 2);
    const long p = 1 + static_cast<long>(bounded_uint64(gen, 6));
    const long q = 1 + static_cast<long>(bounded_uint64(gen, 3));
    g.drawn.emplace_back(Rational(p, q), Coalition::from_mask(t));
  }
  return TUGame(n, std::move(g));
}

TUGame random_table_game(int n, std::uint64_t seed, long max_value) {
  check_player_count(n);
  if (n > kDenseTableLimit) throw std::invalid_argument("table game limited to 16 players");
  if (max_value < 0) throw std::invalid_argument("max_value must be >= 0");
  std::mt19937_64 gen(seed);
  std::vector<Rational> worth(std::size_t{1} << n);
  for (std::size_t m = 1; m < worth.size(); ++m)
    worth[m] = Rational(static_cast<long>(bounded_uint64(gen, static_cast<std::uint64_t>(max_value) + 1)));
  return TUGame::table(n, std::move(worth));
}

TUGame superadditive_cover(const TUGame& g) {
  const int n = g.player_count();
  if (n > kSuperadditiveCheckLimit)
    throw std::invalid_argument("superadditive cover limited to 12 players");
  std::vector<Rational> v = g.materialize();
  // ascending masks: best split of S into T + (S \ T) is already final
  for (std::uint64_t s = 1; s <= full_mask(n); ++s) {
    for (std::uint64_t t = (0 - s) & s;; t = (t - s) & s) {
      if (t != 0 && t != s) {
        Rational split = v[static_cast<std::size_t>(t)] + v[static_cast<std::size_t>(s & ~t)];
        if (split > v[static_cast<std::size_t>(s)]) v[static_cast<std::size_t>(s)] = std::move(split);
      }
      if (t == s) break;
    }
    if (s == full_mask(n)) break;
  }
  return TUGame::table(n, std::move(v));
}

TUGame add(const TUGame& a, const TUGame& b) {
  if (a.player_count() != b.player_count())
    throw std::invalid_argument("cannot add games with different player counts");
  std::vector<Rational> va = a.materialize();
  const std::vector<Rational> vb = b.materialize();
  for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
  return TUGame::table(a.player_count(), std::move(va));
}

TUGame scale(const TUGame& g, const Rational& c) {
  std::vector<Rational> v = g.materialize();
  for (auto& x : v) x *= c;
  return TUGame::table(g.player_count(), std::move(v));
}

GameCheckResult is_superadditive(const TUGame& g, bool strict, int limit) {
  const int n = g.player_count();
  if (n > limit) throw std::invalid_argument("superadditivity check beyond exhaustive limit");
  const std::vector<Rational> v = g.materialize();
  const std::uint64_t full = full_mask(n);
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t rest = full & ~s;
    if (rest != 0) {
      for (std::uint64_t t = (0 - rest) & rest;; t = (t - rest) & rest) {
        if (t != 0) {
          const Rational& lhs = v[static_cast<std::size_t>(s | t)];
          Rational rhs = v[static_cast<std::size_t>(s)] + v[static_cast<std::size_t>(t)];
          if (lhs < rhs || (strict && lhs == rhs))
            return {false, GameCheckWitness{Coalition::from_mask(s), Coalition::from_mask(t),
                                            lhs, std::move(rhs)}};
        }
        if (t == rest) break;
      }
    }
    if (s == full) break;
  }
  return {true, std::nullopt};
}

GameCheckResult is_convex(const TUGame& g, bool strict, int limit) {
  const int n = g.player_count();
  if (n > limit) throw std::invalid_argument("convexity check beyond exhaustive limit");
  const std::vector<Rational> v = g.materialize();
  const std::uint64_t full = full_mask(n);
  for (std::uint64_t s = 0;; ++s) {
    for (std::uint64_t t = 0;; ++t) {
      const bool nested = (s & ~t) == 0 || (t & ~s) == 0;
      if (!nested) {  // nested pairs satisfy the inequality identically
        Rational lhs = v[static_cast<std::size_t>(s | t)] + v[static_cast<std::size_t>(s & t)];
        Rational rhs = v[static_cast<std::size_t>(s)] + v[static_cast<std::size_t>(t)];
        if (lhs < rhs || (strict && lhs == rhs))
          return {false, GameCheckWitness{Coalition::from_mask(s), Coalition::from_mask(t),
                                          std::move(lhs), std::move(rhs)}};
      }
      if (t == full) break;
    }
    if (s == full) break;
  }
  return {true, std::nullopt};
}

}  // namespace dhg
