#ifndef GRUNDY_VERTEX_SET_HPP
#define GRUNDY_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace grundy {

/// Fixed-universe bit vector over vertices 0..n-1. Words beyond the
/// universe are kept zero so popcounts and comparisons stay valid.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1 if empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= n_) return -1;
    size_t i = size_t(v) >> 6;
    uint64_t w = w_[i] & (~uint64_t{0} << (v & 63));
    while (true) {
      if (w) return int(i * 64 + std::countr_zero(w));
      if (++i >= w_.size()) return -1;
      w = w_[i];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  /// Remove every member of o.
  VertexSet& subtract(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace grundy

#endif  // GRUNDY_VERTEX_SET_HPP
