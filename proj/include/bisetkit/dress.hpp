#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisetkit/biset.hpp"
#include "bisetkit/catalog.hpp"
#include "bisetkit/homs.hpp"

namespace bisetkit {

// ---------------------------------------------------------------------------
// Triple products G x K x C, realized as (G x K) x C

struct TripleProduct {
  FiniteGroup g, k, c;
  DirectProduct gk;
  DirectProduct full;

  const FiniteGroup& group() const { return full.group; }
  int order() const { return full.group.order(); }
  Element triple(Element a, Element b, Element z) const { return full.pair(gk.pair(a, b), z); }
  Element first(Element x) const { return gk.first(full.first(x)); }
  Element second(Element x) const { return gk.second(full.first(x)); }
  Element third(Element x) const { return full.second(x); }
  DirectProduct pair13() const { return direct_product(g, c); }
  DirectProduct pair23() const { return direct_product(k, c); }

  friend bool operator==(const TripleProduct& a, const TripleProduct& b) {
    return a.g == b.g && a.k == b.k && a.c == b.c;
  }
};

inline TripleProduct triple_product(const FiniteGroup& g, const FiniteGroup& k, const FiniteGroup& c) {
  auto gk = direct_product(g, k);
  auto full = direct_product(gk.group, c);
  return {g, k, c, gk, full};
}

/// D <= G x K x C with its projections and kernels.
struct TripleSubgroup {
  TripleProduct prod;
  ElementSet d;
  ElementSet p1, p2, p3;
  ElementSet p12, p13, p23;  // in G x K, G x C, K x C
  ElementSet k1, k2, k3;
  ElementSet k12, k13, k23;

  static TripleSubgroup of(const TripleProduct& prod, const ElementSet& d) {
    require(is_subgroup(prod.group(), d), ErrorCode::NotSubgroup, "triple subgroup is not a subgroup");
    TripleSubgroup t{prod, d, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    auto gc = prod.pair13();
    auto kc = prod.pair23();
    d.for_each([&](Element x) {
      Element a = prod.first(x), b = prod.second(x), z = prod.third(x);
      t.p1.insert(a);
      t.p2.insert(b);
      t.p3.insert(z);
      t.p12.insert(prod.gk.pair(a, b));
      t.p13.insert(gc.pair(a, z));
      t.p23.insert(kc.pair(b, z));
      if (b == 0 && z == 0) t.k1.insert(a);
      if (a == 0 && z == 0) t.k2.insert(b);
      if (a == 0 && b == 0) t.k3.insert(z);
      if (z == 0) t.k12.insert(prod.gk.pair(a, b));
      if (b == 0) t.k13.insert(gc.pair(a, z));
      if (a == 0) t.k23.insert(kc.pair(b, z));
    });
    return t;
  }

  int order() const { return d.size(); }
};

/// (g,k,c) . D
inline ElementSet conjugate_triple(const TripleProduct& prod, const ElementSet& d, Element x) {
  return conjugate_set(prod.group(), d, x);
}

/// Conjugacy of two subgroups of G x K x C, screened by cheap invariants first.
inline bool are_conjugate_triples(const TripleProduct& prod, const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return false;
  auto ta = TripleSubgroup::of(prod, a), tb = TripleSubgroup::of(prod, b);
  if (ta.p1.size() != tb.p1.size() || ta.p2.size() != tb.p2.size() || ta.p3.size() != tb.p3.size() ||
      ta.k1.size() != tb.k1.size() || ta.k2.size() != tb.k2.size() || ta.k3.size() != tb.k3.size())
    return false;
  for (int x = 0; x < prod.order(); ++x)
    if (conjugate_triple(prod, a, static_cast<Element>(x)) == b) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Star product and the Mackey formula for 3-sets

/// E * D = {(g,k,c) : exists l with (g,l,c) in E and (l,k,c) in D}.
inline ElementSet star_triple(const TripleProduct& pe, const ElementSet& e, const TripleProduct& pd,
                              const ElementSet& d, const TripleProduct& out) {
  require(pe.k == pd.g, ErrorCode::FactorMismatch, "middle factors differ: " + pe.k.label() + " vs " + pd.g.label());
  require(pe.c == pd.c, ErrorCode::FactorMismatch, "C factors differ: " + pe.c.label() + " vs " + pd.c.label());
  require(out.g == pe.g && out.k == pd.k && out.c == pe.c, ErrorCode::FactorMismatch, "target product does not match");
  auto lc = pe.pair23();
  std::vector<std::vector<Element>> left_of(static_cast<std::size_t>(lc.group.order()));
  e.for_each([&](Element x) { left_of[lc.pair(pe.second(x), pe.third(x))].push_back(pe.first(x)); });
  ElementSet s;
  d.for_each([&](Element y) {
    Element l = pd.first(y), k = pd.second(y), c = pd.third(y);
    for (Element g : left_of[lc.pair(l, c)]) s.insert(out.triple(g, k, c));
  });
  require(is_subgroup(out.group(), s), ErrorCode::Internal, "star product is not a subgroup");
  return s;
}

inline TripleSubgroup star_triple(const TripleSubgroup& e, const TripleSubgroup& d) {
  require(e.prod.k == d.prod.g, ErrorCode::FactorMismatch,
          "middle factors differ: " + e.prod.k.label() + " vs " + d.prod.g.label());
  require(e.prod.c == d.prod.c, ErrorCode::FactorMismatch, "C factors differ");
  auto out = triple_product(e.prod.g, d.prod.k, e.prod.c);
  return TripleSubgroup::of(out, star_triple(e.prod, e.d, d.prod, d.d, out));
}

/// The subgroups E * ^{(l,1,c)}D, (l, c) over p23(E) \ (L x C) / p13(D).
inline std::vector<ElementSet> mackey_triple_terms(const TripleProduct& pe, const ElementSet& e,
                                                   const TripleProduct& pd, const ElementSet& d) {
  require(pe.k == pd.g, ErrorCode::FactorMismatch, "middle factors differ: " + pe.k.label() + " vs " + pd.g.label());
  require(pe.c == pd.c, ErrorCode::FactorMismatch, "C factors differ: " + pe.c.label() + " vs " + pd.c.label());
  auto out = triple_product(pe.g, pd.k, pe.c);
  auto lc = pe.pair23();
  ElementSet u, v;
  e.for_each([&](Element x) { u.insert(lc.pair(pe.second(x), pe.third(x))); });
  d.for_each([&](Element y) { v.insert(lc.pair(pd.first(y), pd.third(y))); });
  std::vector<ElementSet> terms;
  for (Element t : double_cosets(lc.group, u, v)) {
    Element shift = pd.triple(lc.first(t), 0, lc.second(t));
    terms.push_back(star_triple(pe, e, pd, conjugate_triple(pd, d, shift), out));
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Elements of RB_C(G x K) = RB(G x K x C)

class DressElement {
 public:
  explicit DressElement(TripleProduct prod) : prod_(std::move(prod)) {}

  static DressElement of_subgroup(const TripleProduct& prod, const ElementSet& d, Rational coeff = 1) {
    DressElement x(prod);
    x.add(lattice(prod.group()).class_id(d), coeff);
    return x;
  }

  const TripleProduct& product() const { return prod_; }
  const SubgroupLattice& lattice_ref() const { return lattice(prod_.group()); }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int class_id) const {
    auto it = terms_.find(class_id);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  void add(int class_id, const Rational& q) {
    if (q == 0) return;
    auto& v = terms_[class_id];
    v += q;
    if (v == 0) terms_.erase(class_id);
  }
  void add(const DressElement& o, const Rational& scale = 1) {
    require(o.prod_ == prod_, ErrorCode::FactorMismatch, "adding elements over different triple products");
    for (const auto& [c, q] : o.terms_) add(c, q * scale);
  }
  DressElement scaled(const Rational& q) const {
    DressElement r(prod_);
    for (const auto& [c, v] : terms_) r.add(c, v * q);
    return r;
  }
  std::vector<Rational> dense() const {
    std::vector<Rational> v(static_cast<std::size_t>(lattice_ref().class_count()), Rational(0));
    for (const auto& [c, q] : terms_) v[c] = q;
    return v;
  }
  friend bool operator==(const DressElement& a, const DressElement& b) {
    return a.prod_ == b.prod_ && a.terms_ == b.terms_;
  }

 private:
  TripleProduct prod_;
  std::map<int, Rational> terms_;
};

/// All transitive classes of RB_C(G x K).
inline std::vector<DressElement> dress_transitive_classes(const TripleProduct& prod) {
  std::vector<DressElement> out;
  for (int c = 0; c < lattice(prod.group()).class_count(); ++c) {
    DressElement x(prod);
    x.add(c, 1);
    out.push_back(std::move(x));
  }
  return out;
}

/// x o y = x x^d_L y by the 3-set Mackey formula.
inline DressElement dress_compose(const DressElement& x, const DressElement& y) {
  const auto& pe = x.product();
  const auto& pd = y.product();
  require(pe.k == pd.g, ErrorCode::FactorMismatch, "middle factors differ: " + pe.k.label() + " vs " + pd.g.label());
  require(pe.c == pd.c, ErrorCode::FactorMismatch, "C factors differ: " + pe.c.label() + " vs " + pd.c.label());
  auto out = triple_product(pe.g, pd.k, pe.c);
  const auto& lat = lattice(out.group());
  DressElement r(out);
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      for (const auto& s : mackey_triple_terms(pe, x.lattice_ref().class_rep(i), pd, y.lattice_ref().class_rep(j)))
        r.add(lat.class_id(s), a * b);
  return r;
}

/// Builds X x_L Y with the diagonal C-action and splits it into G x K x C orbits.
inline DressElement dress_oracle(const TripleProduct& pe, const ElementSet& e, const TripleProduct& pd,
                                 const ElementSet& d) {
  require(pe.k == pd.g, ErrorCode::FactorMismatch, "middle factors differ");
  require(pe.c == pd.c, ErrorCode::FactorMismatch, "C factors differ");
  auto out = triple_product(pe.g, pd.k, pe.c);
  detail::CosetAction xs(pe.group(), e), ys(pd.group(), d);
  const long total = static_cast<long>(xs.points) * ys.points;
  require(total <= kOracleMaxPoints, ErrorCode::OrderBound, "oracle point set too large");
  auto idx = [&](int a, int b) { return a * ys.points + b; };
  detail::UnionFind uf(static_cast<std::size_t>(total));
  for (Element l : generating_set(pe.k)) {
    Element xl = pe.triple(0, l, 0), yl = pd.triple(l, 0, 0);
    for (int a = 0; a < xs.points; ++a) {
      int a2 = xs.act(xl, a);
      for (int b = 0; b < ys.points; ++b) uf.unite(idx(a, b), idx(a2, ys.act(yl, b)));
    }
  }
  // (g, k, c) . [x, y] = [(g,1,c) x, (1,k,c) y]
  const auto& lat = lattice(out.group());
  DressElement r(out);
  std::vector<char> covered(static_cast<std::size_t>(total), 0);
  for (int a = 0; a < xs.points; ++a)
    for (int b = 0; b < ys.points; ++b) {
      int root = uf.find(idx(a, b));
      if (covered[root]) continue;
      ElementSet stab;
      for (int t = 0; t < out.order(); ++t) {
        Element g = out.first(static_cast<Element>(t)), k = out.second(static_cast<Element>(t)),
                c = out.third(static_cast<Element>(t));
        int r2 = uf.find(idx(xs.act(pe.triple(g, 0, c), a), ys.act(pd.triple(0, k, c), b)));
        covered[r2] = 1;
        if (r2 == root) stab.insert(static_cast<Element>(t));
      }
      r.add(lat.class_id(stab), 1);
    }
  return r;
}

inline DressElement dress_oracle(const DressElement& x, const DressElement& y) {
  const auto& pe = x.product();
  const auto& pd = y.product();
  require(pe.k == pd.g, ErrorCode::FactorMismatch, "middle factors differ");
  require(pe.c == pd.c, ErrorCode::FactorMismatch, "C factors differ");
  DressElement r(triple_product(pe.g, pd.k, pe.c));
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      r.add(dress_oracle(pe, x.lattice_ref().class_rep(i), pd, y.lattice_ref().class_rep(j)), a * b);
  return r;
}

/// {(g, g, c)}
inline ElementSet dress_identity_subgroup(const TripleProduct& prod) {
  require(prod.g == prod.k, ErrorCode::FactorMismatch, "identity needs equal outer factors");
  ElementSet s;
  for (int g = 0; g < prod.g.order(); ++g)
    for (int c = 0; c < prod.c.order(); ++c) s.insert(prod.triple(static_cast<Element>(g), static_cast<Element>(g), static_cast<Element>(c)));
  return s;
}

/// (G x G x C)/(Delta(G) x C)
inline DressElement dress_identity(const FiniteGroup& g, const FiniteGroup& c) {
  auto prod = triple_product(g, g, c);
  return DressElement::of_subgroup(prod, dress_identity_subgroup(prod));
}

// ---------------------------------------------------------------------------
// D_{theta, zeta} and the kernel constraint

/// {(theta(g) zeta(c), g, c)}
inline TripleSubgroup d_theta_zeta(const FiniteGroup& g, const FiniteGroup& c, const GroupHom& theta,
                                   const GroupHom& zeta) {
  require(theta.domain() == g && theta.codomain() == g && theta.is_bijective(), ErrorCode::NotAutomorphism,
          "theta is not an automorphism of " + g.label());
  require(zeta.domain() == c && zeta.codomain() == g, ErrorCode::NotCentral, "zeta must map C into G");
  auto z = center(g);
  for (int x = 0; x < c.order(); ++x)
    require(z.contains(zeta(static_cast<Element>(x))), ErrorCode::NotCentral, "zeta does not land in the center");
  auto prod = triple_product(g, g, c);
  ElementSet d;
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < c.order(); ++x)
      d.insert(prod.triple(g.mul(theta(static_cast<Element>(a)), zeta(static_cast<Element>(x))), static_cast<Element>(a),
                           static_cast<Element>(x)));
  return TripleSubgroup::of(prod, d);
}

inline GroupHom trivial_hom(const FiniteGroup& from, const FiniteGroup& to) {
  return GroupHom(from, to, std::vector<Element>(static_cast<std::size_t>(from.order()), 0));
}

inline bool normal_in(const FiniteGroup& g, const ElementSet& n, const ElementSet& d) {
  bool ok = true;
  d.for_each([&](Element x) {
    if (ok && !(conjugate_set(g, n, x) == n)) ok = false;
  });
  return ok;
}

struct KernelCandidate {
  ElementSet n;
  bool normal = false;
  int index = 0;  // [D : N]
};

/// Subgroups N <= D on which the projection to C is injective.
inline std::vector<KernelCandidate> p3_injective_subgroups(const TripleSubgroup& d) {
  const auto& prod = d.prod;
  auto injective = [&](const ElementSet& s) {
    ElementSet seen;
    bool ok = true;
    s.for_each([&](Element x) {
      Element z = prod.third(x);
      if (seen.contains(z)) ok = false;
      seen.insert(z);
    });
    return ok;
  };
  std::vector<KernelCandidate> out;
  for (auto& n : constrained_subgroups(prod.group(), d.d, injective))
    out.push_back({n, normal_in(prod.group(), n, d.d), d.order() / n.size()});
  return out;
}

inline bool has_full_projections(const TripleSubgroup& d) {
  return d.p1.size() == d.prod.g.order() && d.p2.size() == d.prod.k.order() && d.k1.size() == 1 && d.k2.size() == 1;
}

/// Possible kernels of rho_{A,B} for a factorization D = A * B through a group
/// of order at most `max_index_bound`: p3-injective, normal, of index <= bound.
inline std::vector<ElementSet> admissible_kernel_check(const TripleSubgroup& d, int max_index_bound) {
  require(has_full_projections(d), ErrorCode::PreconditionViolated,
          "admissible kernels need full first and second projections and trivial k1, k2");
  std::vector<ElementSet> out;
  for (auto& cand : p3_injective_subgroups(d))
    if (cand.normal && cand.index <= max_index_bound) out.push_back(cand.n);
  return out;
}

// ---------------------------------------------------------------------------
// Factorization search

struct StarWitness {
  FiniteGroup k;
  TripleSubgroup a;  // in G x K x C
  TripleSubgroup b;  // in K x H x C
  Element shift_l = 0;
  Element shift_c = 0;
};

enum class SearchMode { Pruned, Exhaustive };

inline constexpr long kDefaultSearchBudget = 4'000'000;

namespace detail {

inline std::vector<ElementSet> subgroups_covering(const TripleProduct& prod, const std::function<bool(const TripleSubgroup&)>& ok) {
  std::vector<ElementSet> out;
  for (const auto& s : lattice(prod.group()).subgroups)
    if (ok(TripleSubgroup::of(prod, s))) out.push_back(s);
  return out;
}

inline bool contains_pairs(const ElementSet& big, const ElementSet& small) { return small.is_subset_of(big); }

/// A <= G x K x C, B <= K x H x C with A * B = D exactly.
inline std::optional<StarWitness> search_through(const TripleSubgroup& d, const FiniteGroup& k, long budget) {
  auto pa = triple_product(d.prod.g, k, d.prod.c);
  auto pb = triple_product(k, d.prod.k, d.prod.c);
  auto as = subgroups_covering(pa, [&](const TripleSubgroup& a) { return contains_pairs(a.p13, d.p13); });
  auto bs = subgroups_covering(pb, [&](const TripleSubgroup& b) { return contains_pairs(b.p23, d.p23); });
  require(static_cast<long>(as.size()) * static_cast<long>(bs.size()) <= budget, ErrorCode::SearchBound,
          "factorization search through " + k.label() + " exceeds the search budget");
  for (const auto& a : as)
    for (const auto& b : bs) {
      auto s = star_triple(pa, a, pb, b, d.prod);
      if (s == d.d) return StarWitness{k, TripleSubgroup::of(pa, a), TripleSubgroup::of(pb, b), 0, 0};
    }
  return std::nullopt;
}

}  // namespace detail

/// Searches K in the catalog with |K| < |G| and |K| <= order_bound for a
/// factorization D = A * ^{(l,1,c)}B. Pruned mode skips K when no admissible
/// kernel of index <= |K| exists (only valid for full projections and trivial
/// k1, k2); otherwise the subgroup pairs are scanned.
inline std::optional<StarWitness> is_star_decomposable(const TripleSubgroup& d, int order_bound,
                                                       SearchMode mode = SearchMode::Pruned,
                                                       long budget = kDefaultSearchBudget) {
  const int limit = std::min(order_bound, d.prod.g.order() - 1);
  if (limit < 1) return std::nullopt;
  const bool prunable = mode == SearchMode::Pruned && has_full_projections(d);
  std::vector<KernelCandidate> cands;
  if (prunable) cands = p3_injective_subgroups(d);
  for (const auto& k : groups_smaller_than(limit + 1)) {
    if (prunable) {
      bool any = false;
      for (auto& c : cands) any = any || (c.normal && c.index <= k.order());
      if (!any) continue;
    }
    if (auto w = detail::search_through(d, k, budget)) return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bridges between non-isomorphic groups

/// D <= G x H x C with p1(D) = G, p2(D) = H and k1(D) = k2(D) = 1.
inline std::vector<ElementSet> find_bridges(const FiniteGroup& g, const FiniteGroup& h, const FiniteGroup& c) {
  auto prod = triple_product(g, h, c);
  // trivial k1 and k2 pass to subgroups, so they prune the extension search
  auto keep = [&](const ElementSet& s) {
    bool ok = true;
    s.for_each([&](Element x) {
      if (x == 0) return;
      Element a = prod.first(x), b = prod.second(x), z = prod.third(x);
      if ((b == 0 && z == 0) || (a == 0 && z == 0)) ok = false;
    });
    return ok;
  };
  std::vector<ElementSet> out;
  for (auto& s : constrained_subgroups(prod.group(), prod.group().all(), keep)) {
    auto t = TripleSubgroup::of(prod, s);
    if (t.p1.size() == g.order() && t.p2.size() == h.order()) out.push_back(s);
  }
  return out;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

struct NoBridgeReport {
  FiniteGroup g, h, c;
  int bridges = 0;
};

inline NoBridgeReport no_bridge_check(const FiniteGroup& g, const FiniteGroup& h, const FiniteGroup& c) {
  require(is_prime(c.order()), ErrorCode::PreconditionViolated, "C must have prime order");
  require(g.order() == h.order(), ErrorCode::PreconditionViolated, "G and H must have the same order");
  require(!is_isomorphic(g, h), ErrorCode::PreconditionViolated, "G and H must be non-isomorphic");
  auto found = find_bridges(g, h, c);
  if (!found.empty()) {
    std::string w;
    for (Element e : found.front().to_vector()) w += std::to_string(e) + " ";
    fail(ErrorCode::FoundBridge, "subgroup with full projections and trivial kernels: " + w);
  }
  return {g, h, c, 0};
}

// ---------------------------------------------------------------------------
// Factorization through p1(D)/k1(D)

struct FirstFactorSplit {
  QuotientGroup d1;  // p1(D)/k1(D)
  TripleSubgroup u;  // over (G, D1, C)
  TripleSubgroup v;  // over (D1, K, C)
};

/// U = {(h, pi(h))} x C and V = {(pi(a), k, c) : (a, k, c) in D}; U * V = D.
/// Requires p1(D) = G.
inline FirstFactorSplit factor_through_first(const TripleSubgroup& d) {
  const auto& prod = d.prod;
  require(d.p1.size() == prod.g.order(), ErrorCode::PreconditionViolated, "first projection must be full");
  auto q = quotient_group(prod.g, d.k1);
  auto pu = triple_product(prod.g, q.group, prod.c);
  auto pv = triple_product(q.group, prod.k, prod.c);
  ElementSet u, v;
  for (int h = 0; h < prod.g.order(); ++h)
    for (int c = 0; c < prod.c.order(); ++c)
      u.insert(pu.triple(static_cast<Element>(h), q.projection(static_cast<Element>(h)), static_cast<Element>(c)));
  d.d.for_each([&](Element x) { v.insert(pv.triple(q.projection(prod.first(x)), prod.second(x), prod.third(x))); });
  return {q, TripleSubgroup::of(pu, u), TripleSubgroup::of(pv, v)};
}

// ---------------------------------------------------------------------------
// The Q8 / D8 / C4 example

struct CounterexampleReport {
  int t_order = 0;
  int kernel_order = 0;
  bool kernel_is_alpha2beta2 = false;
  int d_order = 0;
  bool projections_full = false;
  bool kernels_trivial = false;
  int generator_elements = 0;     // elements of D with third coordinate c
  int order4_candidates = 0;
  int normal_order4_candidates = 0;
  int admissible_at_7 = 0;
  bool factors_through_first = false;
  bool decomposable = true;
  nlohmann::json transcript;
};

namespace detail {

inline nlohmann::json set_json(const ElementSet& s) { return s.to_vector(); }

inline Element first_of_order(const FiniteGroup& g, int n, const ElementSet& avoid = ElementSet::singleton(0)) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<Element>(x)) == n && !avoid.contains(static_cast<Element>(x)))
      return static_cast<Element>(x);
  fail(ErrorCode::Internal, "no element of order " + std::to_string(n) + " in " + g.label());
}

}  // namespace detail

/// Builds T = <(a, c^2)> x| <(b, c)> in D8 x C4, tau: T -> Q8 with kernel
/// <alpha^2 beta^2>, D = {(tau(t), t)}, and shows D does not factor through a
/// group of order smaller than 8. Any failed check throws Internal.
inline CounterexampleReport counterexample_check() {
  auto q8 = make_group(GroupKind::Quaternion8);
  auto d8 = make_group(GroupKind::Dihedral, 8);
  auto c4 = cyclic_group(4);
  auto check = [](bool ok, const std::string& what) { require(ok, ErrorCode::Internal, "counterexample: " + what); };

  Element x = detail::first_of_order(q8, 4);
  Element y = detail::first_of_order(q8, 4, cyclic_subgroup(q8, x));
  Element a = detail::first_of_order(d8, 4);
  Element b = detail::first_of_order(d8, 2, cyclic_subgroup(d8, a));
  Element c = 1;
  check(c4.element_order(c) == 4, "c generates C4");
  check(q8.conj(y, x) == q8.inv(x) && q8.pow(x, 2) == q8.pow(y, 2), "Q8 relations");
  check(d8.conj(b, a) == d8.inv(a), "D8 relations");

  auto hc = direct_product(d8, c4);
  Element alpha = hc.pair(a, c4.pow(c, 2));
  Element beta = hc.pair(b, c);
  const auto& hcg = hc.group;
  auto t = closure(hcg, {alpha, beta});
  check(t.size() == 16, "|T| = 16");
  auto t1 = cyclic_subgroup(hcg, alpha), t2 = cyclic_subgroup(hcg, beta);
  check(normal_in(hcg, t1, t), "T1 normal in T");
  check((t1 & t2).size() == 1, "T1 meets T2 trivially");
  check(hcg.conj(beta, alpha) == hcg.inv(alpha), "beta alpha beta^-1 = alpha^-1");

  // tau(alpha^i beta^j) = x^i y^j
  std::map<Element, Element> tau;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      tau[hcg.mul(hcg.pow(alpha, i), hcg.pow(beta, j))] = q8.mul(q8.pow(x, i), q8.pow(y, j));
  check(static_cast<int>(tau.size()) == 16, "alpha^i beta^j enumerate T");
  for (auto& [u, tu] : tau)
    for (auto& [v, tv] : tau) check(tau.at(hcg.mul(u, v)) == q8.mul(tu, tv), "tau is a homomorphism");
  ElementSet ker, image;
  for (auto& [u, tu] : tau) {
    if (tu == 0) ker.insert(u);
    image.insert(tu);
  }
  Element a2b2 = hcg.mul(hcg.pow(alpha, 2), hcg.pow(beta, 2));
  check(image.size() == 8, "tau is onto Q8");

  auto prod = triple_product(q8, d8, c4);
  ElementSet dset;
  for (auto& [u, tu] : tau) dset.insert(prod.triple(tu, hc.first(u), hc.second(u)));
  auto d = TripleSubgroup::of(prod, dset);

  CounterexampleReport r;
  r.t_order = t.size();
  r.kernel_order = ker.size();
  r.kernel_is_alpha2beta2 = ker == cyclic_subgroup(hcg, a2b2) && ker.size() == 2;
  r.d_order = d.order();
  r.projections_full = d.p1.size() == 8 && d.p2.size() == 8;
  r.kernels_trivial = d.k1.size() == 1 && d.k2.size() == 1;

  nlohmann::json tr;
  tr["groups"] = {{"G", q8.label()}, {"H", d8.label()}, {"C", c4.label()}};
  tr["generators"] = {{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"c", c}};
  tr["alpha"] = {a, c4.pow(c, 2)};
  tr["beta"] = {b, c};
  nlohmann::json tj = nlohmann::json::array();
  for (auto& [u, tu] : tau) tj.push_back({{"t", {hc.first(u), hc.second(u)}}, {"tau", tu}});
  tr["T"] = tj;
  tr["tau_kernel"] = nlohmann::json::array();
  ker.for_each([&](Element u) { tr["tau_kernel"].push_back({hc.first(u), hc.second(u)}); });
  nlohmann::json dj = nlohmann::json::array();
  for (Element e : generating_set(subgroup_as_group(prod.group(), dset).group)) {
    Element g = subgroup_as_group(prod.group(), dset).to_parent[e];
    dj.push_back({prod.first(g), prod.second(g), prod.third(g)});
  }
  tr["D_generators"] = dj;
  tr["D_order"] = d.order();

  // elements (r, s, c) of D and the p3-injective candidates
  int gens = 0;
  dset.for_each([&](Element e) { gens += prod.third(e) == c; });
  r.generator_elements = gens;
  nlohmann::json cj = nlohmann::json::array();
  for (auto& cand : p3_injective_subgroups(d)) {
    if (cand.n.size() == 4) {
      ++r.order4_candidates;
      r.normal_order4_candidates += cand.normal;
    }
    nlohmann::json elems = nlohmann::json::array();
    cand.n.for_each([&](Element e) { elems.push_back({prod.first(e), prod.second(e), prod.third(e)}); });
    cj.push_back({{"order", cand.n.size()}, {"index", cand.index}, {"normal", cand.normal}, {"elements", elems}});
  }
  tr["kernel_candidates"] = cj;
  r.admissible_at_7 = static_cast<int>(admissible_kernel_check(d, 7).size());

  auto lf = factor_through_first(d);
  r.factors_through_first = lf.d1.group.order() == 8 && star_triple(lf.u, lf.v).d == d.d;
  tr["factorization_through_p1"] = {{"order", lf.d1.group.order()}, {"reproduces_D", r.factors_through_first}};

  r.decomposable = is_star_decomposable(d, 7, SearchMode::Pruned).has_value();
  tr["admissible_kernels_at_7"] = r.admissible_at_7;
  tr["verdict"] = r.decomposable ? "DECOMPOSABLE" : "NOT DECOMPOSABLE";

  check(r.t_order == 16, "|T| = 16");
  check(r.kernel_order == 2 && r.kernel_is_alpha2beta2, "Ker tau = <alpha^2 beta^2>");
  check(r.d_order == 16, "|D| = 16");
  check(r.projections_full && r.kernels_trivial, "projections full and kernels trivial");
  check(r.generator_elements == 4 && r.order4_candidates == 4, "four order-4 candidates");
  check(r.normal_order4_candidates == 0, "no candidate is normal");
  check(r.admissible_at_7 == 0, "no admissible kernel of index at most 7");
  check(r.factors_through_first, "U * V = D");
  check(!r.decomposable, "D does not factor through a smaller group");
  r.transcript = std::move(tr);
  return r;
}

}  // namespace bisetkit
