#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bisetkit/group.hpp"

namespace bisetkit {

/// A small generating set: repeatedly adjoin the element of largest order
/// (least index on ties) that is not yet generated.
inline std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> by_order(static_cast<std::size_t>(g.order()));
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  ElementSet span = ElementSet::singleton(0);
  for (Element x : by_order) {
    if (span.size() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

/// Multiset of element orders, a cheap isomorphism invariant.
inline std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) p[i] = g.element_order(static_cast<Element>(i));
  std::sort(p.begin(), p.end());
  return p;
}

namespace detail {

/// Enumerates homomorphisms G -> H determined by generator images, calling
/// `visit` on every map that is a homomorphism (and bijective when `bijective`).
/// Stops early when `visit` returns false.
inline void for_each_generator_map(const FiniteGroup& g, const FiniteGroup& h, bool bijective,
                                   const std::function<bool(const std::vector<Element>&)>& visit) {
  const auto gens = generating_set(g);
  // BFS words over the generators.
  std::vector<Element> word_order{0};
  std::vector<std::pair<int, int>> parent{{-1, -1}};  // (position of prefix, generator slot)
  {
    ElementSet seen = ElementSet::singleton(0);
    for (std::size_t i = 0; i < word_order.size(); ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Element y = g.mul(word_order[i], gens[s]);
        if (!seen.contains(y)) {
          seen.insert(y);
          word_order.push_back(y);
          parent.emplace_back(static_cast<int>(i), static_cast<int>(s));
        }
      }
  }
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (int y = 0; y < h.order(); ++y) {
      int og = g.element_order(gens[s]), oh = h.element_order(static_cast<Element>(y));
      if (bijective ? og == oh : og % oh == 0) candidates[s].push_back(static_cast<Element>(y));
    }

  std::vector<Element> img(gens.size());
  std::vector<Element> map(static_cast<std::size_t>(g.order()));
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (stop) return;
    if (s == gens.size()) {
      map[0] = 0;
      for (std::size_t i = 1; i < word_order.size(); ++i) {
        auto [p, slot] = parent[i];
        map[word_order[i]] = h.mul(map[word_order[p]], img[slot]);
      }
      for (int x = 0; x < g.order(); ++x)
        for (std::size_t t = 0; t < gens.size(); ++t)
          if (map[g.mul(static_cast<Element>(x), gens[t])] != h.mul(map[x], img[t])) return;
      if (bijective) {
        ElementSet im;
        for (auto e : map) im.insert(e);
        if (im.size() != h.order()) return;
      }
      if (!visit(map)) stop = true;
      return;
    }
    for (Element y : candidates[s]) {
      img[s] = y;
      rec(s + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace detail

/// An isomorphism G -> H if one exists; the witness is the first one in
/// lexicographic order of generator images.
inline std::optional<GroupHom> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order() || g.is_abelian() != h.is_abelian() || order_profile(g) != order_profile(h))
    return std::nullopt;
  if (element_classes(g).count() != element_classes(h).count()) return std::nullopt;
  std::optional<GroupHom> found;
  detail::for_each_generator_map(g, h, true, [&](const std::vector<Element>& m) {
    found = GroupHom::unchecked(g, h, m);
    return false;
  });
  return found;
}

/// All homomorphisms G -> H.
inline std::vector<GroupHom> homomorphisms(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<GroupHom> out;
  detail::for_each_generator_map(g, h, false, [&](const std::vector<Element>& m) {
    out.push_back(GroupHom::unchecked(g, h, m));
    return true;
  });
  return out;
}

struct AutomorphismGroup {
  std::vector<GroupHom> all;   // deterministic order; identity first
  std::vector<bool> inner;     // parallel to `all`
  int inner_count = 0;
  int out_order = 0;
};

inline GroupHom inner_automorphism(const FiniteGroup& g, Element x) {
  std::vector<Element> im(static_cast<std::size_t>(g.order()));
  for (int y = 0; y < g.order(); ++y) im[y] = g.conj(x, static_cast<Element>(y));
  return GroupHom::unchecked(g, g, std::move(im));
}

inline AutomorphismGroup automorphisms(const FiniteGroup& g) {
  require(g.order() <= kMaxOrder, ErrorCode::OrderBound, "group too large for automorphism enumeration");
  AutomorphismGroup a;
  std::vector<std::vector<Element>> maps;
  detail::for_each_generator_map(g, g, true, [&](const std::vector<Element>& m) {
    maps.push_back(m);
    return true;
  });
  std::sort(maps.begin(), maps.end());  // identity map is lexicographically least
  std::vector<std::vector<Element>> inner_maps;
  for (int x = 0; x < g.order(); ++x) inner_maps.push_back(inner_automorphism(g, static_cast<Element>(x)).images());
  std::sort(inner_maps.begin(), inner_maps.end());
  inner_maps.erase(std::unique(inner_maps.begin(), inner_maps.end()), inner_maps.end());
  for (auto& m : maps) {
    bool inn = std::binary_search(inner_maps.begin(), inner_maps.end(), m);
    a.inner.push_back(inn);
    a.all.push_back(GroupHom::unchecked(g, g, std::move(m)));
  }
  a.inner_count = static_cast<int>(inner_maps.size());
  a.out_order = static_cast<int>(a.all.size()) / a.inner_count;
  return a;
}

inline bool is_automorphism(const GroupHom& h) { return h.domain() == h.codomain() && h.is_bijective(); }

/// Number-theoretic Moebius function.
inline int mobius_int(long n) {
  require(n >= 1, ErrorCode::InvalidInput, "mobius_int needs n >= 1");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace bisetkit
