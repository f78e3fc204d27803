#ifndef HYPOW_VERTEX_SET_HPP
#define HYPOW_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hypow {

// Fixed-capacity vertex bitset.  Every instance in the corpus and every
// generated test graph stays well under 256 vertices, so four words inline
// keep this trivially copyable and cheap to hash.
struct VertexSet {
  static constexpr int kWords = 4;
  static constexpr int kCapacity = kWords * 64;
  std::array<std::uint64_t, kWords> w{};

  VertexSet() = default;
  explicit VertexSet(const std::vector<int>& vs) {
    for (int v : vs) insert(v);
  }

  static void check(int v) {
    if (v < 0 || v >= kCapacity) throw std::out_of_range("VertexSet: vertex out of range");
  }

  void insert(int v) {
    check(v);
    w[v >> 6] |= std::uint64_t(1) << (v & 63);
  }
  void erase(int v) {
    check(v);
    w[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  }
  bool contains(int v) const {
    if (v < 0 || v >= kCapacity) return false;
    return (w[v >> 6] >> (v & 63)) & 1;
  }

  int size() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  void clear() { w.fill(0); }

  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    for (int i = 0; i < kWords; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    for (int i = 0; i < kWords; ++i) r.w[i] = a.w[i] | b.w[i];
    return r;
  }
  // set difference a \ b
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    for (int i = 0; i < kWords; ++i) r.w[i] = a.w[i] & ~b.w[i];
    return r;
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w == b.w; }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.w < b.w; }

  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }

  // Ascending vertex list.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        int b = std::countr_zero(x);
        out.push_back(i * 64 + b);
        x &= x - 1;
      }
    }
    return out;
  }

  int min() const {
    for (int i = 0; i < kWords; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    throw std::logic_error("VertexSet::min: empty set");
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// All v in [0, n) as a set.
inline VertexSet full_set(int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v) s.insert(v);
  return s;
}

}  // namespace hypow

#endif
