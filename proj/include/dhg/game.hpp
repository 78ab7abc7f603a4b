#ifndef DHG_GAME_HPP
#define DHG_GAME_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "dhg/coalition.hpp"
#include "dhg/rational.hpp"

namespace dhg {

inline constexpr int kDenseTableLimit = 16;          // 2^16 rationals
inline constexpr int kSuperadditiveCheckLimit = 12;  // pairs of disjoint coalitions
inline constexpr int kConvexityCheckLimit = 10;      // all 4^n coalition pairs

// v(S) given explicitly for every coalition mask; worth[0] == 0.
struct TableGame {
  std::vector<Rational> worth;
  friend bool operator==(const TableGame&, const TableGame&) = default;
};

// v(S) = |S|^k
struct CardinalityPowerGame {
  int k = 1;
  friend bool operator==(const CardinalityPowerGame&, const CardinalityPowerGame&) = default;
};

// v(S) = sum of weights over members of S
struct AdditiveGame {
  std::vector<Rational> weights;
  friend bool operator==(const AdditiveGame&, const AdditiveGame&) = default;
};

// v(S) = 1 if required subset of S else 0
struct UnanimityGame {
  Coalition required;
  friend bool operator==(const UnanimityGame&, const UnanimityGame&) = default;
};

// Seed-determined non-negative combination of unanimity games on coalitions
// of size >= 2, plus eps * |S|^2. Convex by construction; strictly convex
// when eps > 0. The drawn terms are materialized at construction so worth()
// never touches the generator again.
struct RandomSupermodularGame {
  int terms = 0;
  std::uint64_t seed = 0;
  Rational eps;
  std::vector<std::pair<Rational, Coalition>> drawn;  // (coefficient, T)
  friend bool operator==(const RandomSupermodularGame& a, const RandomSupermodularGame& b) {
    return a.terms == b.terms && a.seed == b.seed && a.eps == b.eps;
  }
};

// A transferable-utility game (N, v) with v(empty) = 0, as a dense table or
// one of the closed-form families above.
class TUGame {
 public:
  using Kind = std::variant<TableGame, CardinalityPowerGame, AdditiveGame, UnanimityGame,
                            RandomSupermodularGame>;

  static TUGame table(int n, std::vector<Rational> worth);
  static TUGame cardinality_power(int n, int k);
  static TUGame additive(std::vector<Rational> weights);
  static TUGame unanimity(int n, Coalition required);

  int player_count() const { return n_; }
  const Kind& kind() const { return kind_; }
  Rational worth(Coalition s) const;

  // dense 2^n worth table (n <= kDenseTableLimit)
  std::vector<Rational> materialize() const;

  friend bool operator==(const TUGame&, const TUGame&) = default;

 private:
  TUGame(int n, Kind kind) : n_(n), kind_(std::move(kind)) {}
  friend TUGame random_supermodular_game(int n, int terms, std::uint64_t seed, const Rational& eps);
  int n_ = 1;
  Kind kind_;
};

// Deterministic per (n, terms, seed, eps); see RandomSupermodularGame.
TUGame random_supermodular_game(int n, int terms, std::uint64_t seed, const Rational& eps);

// Seed-determined dense table with integer worths in [0, max_value] and
// v(empty) = 0. Instance plumbing for test suites.
TUGame random_table_game(int n, std::uint64_t seed, long max_value = 12);

// Least superadditive game pointwise above g: v'(S) maximizes v over all
// partitions of S. Used to produce superadditive-but-not-necessarily-convex
// instances from arbitrary tables. n <= kSuperadditiveCheckLimit.
TUGame superadditive_cover(const TUGame& g);

// Pointwise sum / scaling, materialized as table games (n <= kDenseTableLimit).
TUGame add(const TUGame& a, const TUGame& b);
TUGame scale(const TUGame& g, const Rational& c);

// A violating pair for a failed game-property check: lhs < rhs (or lhs <= rhs
// for a failed strict check) where the property demands lhs >= rhs (resp. >).
struct GameCheckWitness {
  Coalition s, t;
  Rational lhs, rhs;
};

struct GameCheckResult {
  bool ok = true;
  std::optional<GameCheckWitness> witness;
  explicit operator bool() const { return ok; }
};

// Exhaustive superadditivity check over disjoint non-empty pairs, in
// lexicographic (S,T) mask order. strict requires > everywhere.
GameCheckResult is_superadditive(const TUGame& g, bool strict = false,
                                 int limit = kSuperadditiveCheckLimit);

// Exhaustive convexity (supermodularity) check over all coalition pairs, in
// lexicographic (S,T) mask order. strict requires > for inclusion-incomparable
// pairs (the inequality is an identity when S and T are nested).
GameCheckResult is_convex(const TUGame& g, bool strict = false, int limit = kConvexityCheckLimit);

}  // namespace dhg

#endif  // DHG_GAME_HPP
