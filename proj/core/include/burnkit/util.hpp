#ifndef BURNKIT_UTIL_HPP
#define BURNKIT_UTIL_HPP

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace burnkit {

// Largest s with s*s <= x, exact for the full 64-bit range.
inline std::uint64_t floor_isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (s > 0 && s > x / s) --s;                    // s*s > x without overflow
  while ((s + 1) <= x / (s + 1)) ++s;
  return s;
}

// Smallest s with s*s >= x.
inline std::uint64_t ceil_isqrt(std::uint64_t x) {
  std::uint64_t f = floor_isqrt(x);
  return f * f == x ? f : f + 1;
}

// Smallest s with s*s*den >= num, i.e. ceil(sqrt(num/den)) for num,den > 0.
// Decided in integer arithmetic; the float estimate is only a starting point.
inline std::uint64_t ceil_sqrt_rational(std::uint64_t num, std::uint64_t den) {
  auto ge = [&](std::uint64_t s) {
    return static_cast<unsigned __int128>(s) * s * den >= num;
  };
  auto s = static_cast<std::uint64_t>(
      std::sqrt(static_cast<double>(num) / static_cast<double>(den)));
  while (s > 0 && ge(s - 1)) --s;
  while (!ge(s)) ++s;
  return s;
}

// FNV-1a, used for input and campaign-spec digests.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Fixed-capacity bitset over vertex sets. The burn solver unions and counts
// these in its inner loop, so the common operations avoid temporaries.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  void or_assign(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }

  // |this & ~mask| : what this set would newly cover on top of mask.
  int count_and_not(const Bitset& mask) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & ~mask.w_[i]);
    return c;
  }

  // (this & ~mask) subset of (other & ~mask)?
  bool gain_subset_of(const Bitset& other, const Bitset& mask) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((w_[i] & ~mask.w_[i]) & ~other.w_[i]) return false;
    return true;
  }

  bool all() const {
    int full = n_ >> 6;
    for (int i = 0; i < full; ++i)
      if (w_[i] != ~0ULL) return false;
    int rem = n_ & 63;
    if (rem && w_[full] != ((1ULL << rem) - 1)) return false;
    return true;
  }

  bool operator==(const Bitset& o) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace burnkit

#endif
