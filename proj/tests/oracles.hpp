// Brute-force reference computations used to freeze expected values in tests.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "bisetkit/group.hpp"

namespace oracle {

using bisetkit::Element;
using bisetkit::ElementSet;
using bisetkit::FiniteGroup;

/// Every subset containing the identity that is closed under multiplication.
inline std::vector<ElementSet> subgroups_by_subsets(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<ElementSet> out;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    ElementSet s = ElementSet::singleton(0);
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1UL) s.insert(static_cast<Element>(i));
    bool closed = true;
    auto v = s.to_vector();
    for (Element a : v) {
      for (Element b : v)
        if (!s.contains(g.mul(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), bisetkit::size_lex_less);
  return out;
}

/// Partition of the given subgroups into conjugation orbits, by naive conjugation.
inline int conjugacy_class_count(const FiniteGroup& g, const std::vector<ElementSet>& subs) {
  std::vector<std::vector<Element>> keys;
  for (const auto& s : subs) keys.push_back(s.to_vector());
  std::set<std::vector<std::vector<Element>>> orbits;
  for (const auto& s : subs) {
    std::set<std::vector<Element>> orbit;
    for (int x = 0; x < g.order(); ++x) {
      std::vector<Element> c;
      s.for_each([&](Element e) { c.push_back(g.mul(g.mul(static_cast<Element>(x), e), g.inv(static_cast<Element>(x)))); });
      std::sort(c.begin(), c.end());
      orbit.insert(c);
    }
    orbits.insert({orbit.begin(), orbit.end()});
  }
  return static_cast<int>(orbits.size());
}

/// Isomorphism test by trying every bijection fixing the identity (order <= 8).
inline bool isomorphic_by_bijections(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  const int n = g.order();
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    auto img = [&](int x) { return x == 0 ? 0 : perm[x - 1]; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = img(g.mul(static_cast<Element>(a), static_cast<Element>(b))) ==
             h.mul(static_cast<Element>(img(a)), static_cast<Element>(img(b)));
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline int automorphism_count_by_bijections(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  int count = 0;
  do {
    auto img = [&](int x) { return x == 0 ? 0 : perm[x - 1]; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = img(g.mul(static_cast<Element>(a), static_cast<Element>(b))) ==
             g.mul(static_cast<Element>(img(a)), static_cast<Element>(img(b)));
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Moebius function by sieving squarefree numbers and counting prime factors.
inline std::vector<int> mobius_sieve(int limit) {
  std::vector<int> mu(limit + 1, 1);
  std::vector<bool> composite(limit + 1, false);
  for (int p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (int m = p; m <= limit; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    for (long m = static_cast<long>(p) * p; m <= limit; m += static_cast<long>(p) * p) mu[m] = 0;
  }
  return mu;
}

/// Number of distinct double cosets U g V, found by materializing every set.
inline int double_coset_count(const FiniteGroup& g, const ElementSet& u, const ElementSet& v) {
  std::set<std::vector<Element>> cosets;
  for (int x = 0; x < g.order(); ++x) {
    ElementSet s;
    u.for_each([&](Element a) { v.for_each([&](Element b) { s.insert(g.mul(g.mul(a, static_cast<Element>(x)), b)); }); });
    cosets.insert(s.to_vector());
  }
  return static_cast<int>(cosets.size());
}

inline int count_elements_of_order(const FiniteGroup& g, int k) {
  int c = 0;
  for (int x = 0; x < g.order(); ++x) c += g.element_order(static_cast<Element>(x)) == k;
  return c;
}

}  // namespace oracle
