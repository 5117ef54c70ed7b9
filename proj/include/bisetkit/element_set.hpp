#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bisetkit {

using Element = std::uint16_t;

/// Largest group order handled anywhere in the library.
inline constexpr int kMaxOrder = 256;

/// Fixed-capacity bitset over element indices of a group of order <= kMaxOrder.
class ElementSet {
 public:
  static constexpr int kWords = kMaxOrder / 64;

  ElementSet() = default;

  static ElementSet singleton(Element e) {
    ElementSet s;
    s.insert(e);
    return s;
  }

  static ElementSet range(int n) {
    ElementSet s;
    for (int i = 0; i < n; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        fn(static_cast<Element>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  /// Smallest member; the set must be non-empty.
  Element first() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return static_cast<Element>(i * 64 + std::countr_zero(words_[i]));
    return 0;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElementSet operator&(const ElementSet& o) const {
    ElementSet r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  ElementSet operator|(const ElementSet& o) const {
    ElementSet r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  ElementSet minus(const ElementSet& o) const {
    ElementSet r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Order by (size, sorted member list), the canonical subgroup order.
inline bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.to_vector() < b.to_vector();
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace bisetkit
