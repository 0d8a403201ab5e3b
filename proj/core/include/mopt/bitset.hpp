#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mopt {

/// Fixed-capacity bitset sized at runtime; used for DP certificates.
class VBits {
 public:
  VBits() = default;
  explicit VBits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  int size() const { return n_; }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  VBits& operator|=(const VBits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  bool operator==(const VBits& o) const = default;

  /// Lexicographic order on the increasing member sequences: the set whose
  /// first differing position holds the smaller element comes first, and a
  /// proper prefix precedes its extensions.
  bool lex_less(const VBits& o) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t diff = w_[i] ^ o.w_[i];
      if (!diff) continue;
      const int bit = std::countr_zero(diff);
      const bool mine = (w_[i] >> bit) & 1;
      // Elements below the first difference are shared. If the other set
      // has nothing at or beyond the differing element, it is a prefix.
      const VBits& shorter = mine ? o : *this;
      std::uint64_t high = shorter.w_[i] & ~((std::uint64_t{1} << bit) - 1);
      if (high) return mine;
      for (size_t j = i + 1; j < w_.size(); ++j)
        if (shorter.w_[j]) return mine;
      return !mine;
    }
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace mopt
