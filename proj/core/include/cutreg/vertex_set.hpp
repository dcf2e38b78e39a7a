#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cutreg {

/// Subset of {0..n-1} with bitset semantics. Universe size is fixed at
/// construction; all set operations require matching universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), blocks_((n + 63) / 64, 0) {
    if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
  }

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  static VertexSet from_indices(int n, const std::vector<int>& idx) {
    VertexSet s(n);
    for (int v : idx) s.insert(v);
    return s;
  }

  /// Low 64 bits interpreted as membership; n must be <= 64.
  static VertexSet from_mask(int n, std::uint64_t mask) {
    if (n > 64) throw std::invalid_argument("VertexSet::from_mask: n > 64");
    VertexSet s(n);
    if (n > 0) {
      std::uint64_t keep = n == 64 ? ~0ull : ((1ull << n) - 1);
      s.blocks_[0] = mask & keep;
    }
    return s;
  }

  int universe() const { return n_; }

  int count() const {
    int c = 0;
    for (std::uint64_t b : blocks_) c += std::popcount(b);
    return c;
  }

  bool empty() const {
    for (std::uint64_t b : blocks_)
      if (b) return false;
    return true;
  }

  bool contains(int v) const {
    return (blocks_[v >> 6] >> (v & 63)) & 1ull;
  }

  void insert(int v) {
    check(v);
    blocks_[v >> 6] |= 1ull << (v & 63);
  }

  void erase(int v) {
    check(v);
    blocks_[v >> 6] &= ~(1ull << (v & 63));
  }

  VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) s.blocks_[i] = ~blocks_[i];
    s.trim();
    return s;
  }

  VertexSet intersect(const VertexSet& o) const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      s.blocks_[i] = blocks_[i] & o.blocks_[i];
    return s;
  }

  VertexSet unite(const VertexSet& o) const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      s.blocks_[i] = blocks_[i] | o.blocks_[i];
    return s;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      std::uint64_t b = blocks_[i];
      while (b) {
        int bit = std::countr_zero(b);
        f(static_cast<int>(i * 64 + bit));
        b &= b - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& blocks() const { return blocks_; }

  bool operator==(const VertexSet&) const = default;

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
  }
  void trim() {
    int rem = n_ & 63;
    if (rem != 0 && !blocks_.empty()) blocks_.back() &= (1ull << rem) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace cutreg
