#ifndef DHG_COALITION_HPP
#define DHG_COALITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace dhg {

// Players are numbered 1..n.
using PlayerId = int;

inline constexpr int kMaxPlayers = 64;

// Subset of players as a bitmask: bit (i-1) set <=> player i is a member.
class Coalition {
 public:
  constexpr Coalition() = default;
  static constexpr Coalition from_mask(std::uint64_t m) { return Coalition(m); }
  static Coalition single(PlayerId i) { return Coalition(bit(i)); }
  static Coalition full(int n) {
    if (n < 0 || n > kMaxPlayers) throw std::out_of_range("Coalition::full: bad player count");
    return Coalition(n == kMaxPlayers ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Coalition of(std::initializer_list<PlayerId> players) {
    std::uint64_t m = 0;
    for (PlayerId p : players) m |= bit(p);
    return Coalition(m);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  bool contains(PlayerId i) const { return (mask_ & bit(i)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  constexpr bool subset_of(Coalition o) const { return (mask_ & ~o.mask_) == 0; }
  bool intersects(Coalition o) const { return (mask_ & o.mask_) != 0; }
  Coalition with(PlayerId i) const { return Coalition(mask_ | bit(i)); }
  Coalition without(PlayerId i) const { return Coalition(mask_ & ~bit(i)); }
  PlayerId lowest() const { return std::countr_zero(mask_) + 1; }  // precondition: non-empty

  std::vector<PlayerId> players() const {
    std::vector<PlayerId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.mask_ | b.mask_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.mask_ & b.mask_); }
  // set difference
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(Coalition a, Coalition b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator!=(Coalition a, Coalition b) { return a.mask_ != b.mask_; }
  friend constexpr bool operator<(Coalition a, Coalition b) { return a.mask_ < b.mask_; }

 private:
  explicit constexpr Coalition(std::uint64_t m) : mask_(m) {}
  static std::uint64_t bit(PlayerId i) {
    if (i < 1 || i > kMaxPlayers) throw std::out_of_range("player index out of range");
    return std::uint64_t{1} << (i - 1);
  }
  std::uint64_t mask_ = 0;
};

}  // namespace dhg

#endif  // DHG_COALITION_HPP
