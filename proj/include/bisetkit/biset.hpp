#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bisetkit/group.hpp"
#include "bisetkit/homs.hpp"
#include "bisetkit/rational.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

// ---------------------------------------------------------------------------
// Projections and kernels of subgroups of a direct product

inline ElementSet proj_left(const DirectProduct& p, const ElementSet& l) {
  ElementSet s;
  l.for_each([&](Element x) { s.insert(p.first(x)); });
  return s;
}
inline ElementSet proj_right(const DirectProduct& p, const ElementSet& l) {
  ElementSet s;
  l.for_each([&](Element x) { s.insert(p.second(x)); });
  return s;
}
inline ElementSet kernel_left(const DirectProduct& p, const ElementSet& l) {
  ElementSet s;
  l.for_each([&](Element x) {
    if (p.second(x) == 0) s.insert(p.first(x));
  });
  return s;
}
inline ElementSet kernel_right(const DirectProduct& p, const ElementSet& l) {
  ElementSet s;
  l.for_each([&](Element x) {
    if (p.first(x) == 0) s.insert(p.second(x));
  });
  return s;
}

/// Delta_sigma = {(a, sigma(a))} inside G x G' for a homomorphism sigma: G -> G'.
inline ElementSet twisted_diagonal(const DirectProduct& p, const GroupHom& sigma) {
  ElementSet s;
  for (int a = 0; a < sigma.domain().order(); ++a) s.insert(p.pair(static_cast<Element>(a), sigma(static_cast<Element>(a))));
  return s;
}

inline ElementSet diagonal(const DirectProduct& p) {
  ElementSet s;
  for (int a = 0; a < p.left.order(); ++a) s.insert(p.pair(static_cast<Element>(a), static_cast<Element>(a)));
  return s;
}

// ---------------------------------------------------------------------------
// Elements of the Burnside group B(H, G)

/// A transitive (H, G)-biset (H x G)/L, L up to conjugacy.
struct BisetClass {
  FiniteGroup left;
  FiniteGroup right;
  int class_id = 0;

  DirectProduct product() const { return direct_product(left, right); }
  const SubgroupLattice& lattice_ref() const { return lattice(product().group); }
  const ElementSet& stabilizer() const { return lattice_ref().class_rep(class_id); }

  static BisetClass of(const FiniteGroup& h, const FiniteGroup& g, const ElementSet& l) {
    auto p = direct_product(h, g);
    return {h, g, lattice(p.group).class_id(l)};
  }
  friend bool operator==(const BisetClass& a, const BisetClass& b) {
    return a.left == b.left && a.right == b.right && a.class_id == b.class_id;
  }
};

/// Sparse rational combination of transitive (H, G)-bisets.
class BurnsideElement {
 public:
  BurnsideElement(FiniteGroup left, FiniteGroup right) : left_(std::move(left)), right_(std::move(right)) {}
  BurnsideElement(const BisetClass& c, Rational coeff = 1) : BurnsideElement(c.left, c.right) {
    add(c.class_id, coeff);
  }

  static BurnsideElement of_subgroup(const FiniteGroup& h, const FiniteGroup& g, const ElementSet& l,
                                     Rational coeff = 1) {
    return BurnsideElement(BisetClass::of(h, g, l), std::move(coeff));
  }

  const FiniteGroup& left() const { return left_; }
  const FiniteGroup& right() const { return right_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  DirectProduct product() const { return direct_product(left_, right_); }
  const SubgroupLattice& lattice_ref() const { return lattice(product().group); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int class_id) const {
    auto it = terms_.find(class_id);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(int class_id, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(class_id, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const BurnsideElement& o, const Rational& scale = 1) {
    require(o.left_ == left_ && o.right_ == right_, ErrorCode::InterfaceMismatch, "adding elements of different B(H,G)");
    for (const auto& [c, q] : o.terms_) add(c, q * scale);
  }

  BurnsideElement scaled(const Rational& q) const {
    BurnsideElement r(left_, right_);
    for (const auto& [c, v] : terms_) r.add(c, v * q);
    return r;
  }

  /// Dense coordinates over the conjugacy classes of subgroups of H x G.
  std::vector<Rational> dense() const {
    std::vector<Rational> v(static_cast<std::size_t>(lattice_ref().class_count()), Rational(0));
    for (const auto& [c, q] : terms_) v[c] = q;
    return v;
  }

  std::vector<BisetClass> support() const {
    std::vector<BisetClass> out;
    for (const auto& [c, q] : terms_) out.push_back({left_, right_, c});
    return out;
  }

  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.terms_ == b.terms_;
  }
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) {
    a.add(b);
    return a;
  }

 private:
  FiniteGroup left_;
  FiniteGroup right_;
  std::map<int, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Composition

/// L * M = {(h, k) : exists g with (h, g) in L and (g, k) in M}.
inline ElementSet star_product(const DirectProduct& hg, const ElementSet& l, const DirectProduct& gk,
                               const ElementSet& m, const DirectProduct& hk) {
  const int ng = hg.right.order();
  std::vector<std::vector<Element>> left_of(ng), right_of(ng);
  l.for_each([&](Element x) { left_of[hg.second(x)].push_back(hg.first(x)); });
  m.for_each([&](Element x) { right_of[gk.first(x)].push_back(gk.second(x)); });
  ElementSet out;
  for (int g = 0; g < ng; ++g)
    for (Element h : left_of[g])
      for (Element k : right_of[g]) out.insert(hk.pair(h, k));
  return out;
}

/// ^{(g,1)}M
inline ElementSet shift_left(const DirectProduct& gk, const ElementSet& m, Element g) {
  if (g == 0) return m;
  ElementSet out;
  m.for_each([&](Element x) { out.insert(gk.pair(gk.left.conj(g, gk.first(x)), gk.second(x))); });
  return out;
}

/// Mackey formula for two transitive bisets.
inline BurnsideElement compose_transitive(const BisetClass& x, const BisetClass& y) {
  require(x.right == y.left, ErrorCode::MiddleMismatch,
          "middle groups differ: " + x.right.label() + " vs " + y.left.label());
  auto hg = x.product();
  auto gk = y.product();
  auto hk = direct_product(x.left, y.right);
  const auto& lat = lattice(hk.group);
  const auto& l = x.stabilizer();
  const auto& m = y.stabilizer();
  BurnsideElement out(x.left, y.right);
  for (Element g : double_cosets(x.right, proj_right(hg, l), proj_left(gk, m)))
    out.add(lat.class_id(star_product(hg, l, gk, shift_left(gk, m, g), hk)), 1);
  return out;
}

/// x o y = x x_G y for x in B(H, G) and y in B(G, K).
inline BurnsideElement compose_bisets(const BurnsideElement& x, const BurnsideElement& y) {
  require(x.right() == y.left(), ErrorCode::MiddleMismatch,
          "middle groups differ: " + x.right().label() + " vs " + y.left().label());
  BurnsideElement out(x.left(), y.right());
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      out.add(compose_transitive({x.left(), x.right(), i}, {y.left(), y.right(), j}), a * b);
  return out;
}

namespace detail {

/// A transitive (H x G)-set P/L realized on coset indices.
struct CosetAction {
  int points = 0;
  std::vector<int> coset_of;        // element of P -> coset index
  std::vector<Element> rep;         // coset index -> representative
  const FiniteGroup* group = nullptr;

  CosetAction(const FiniteGroup& p, const ElementSet& l) : group(&p) {
    coset_of.assign(p.order(), -1);
    auto lv = l.to_vector();
    for (int x = 0; x < p.order(); ++x) {
      if (coset_of[x] >= 0) continue;
      rep.push_back(static_cast<Element>(x));
      for (Element s : lv) coset_of[p.mul(static_cast<Element>(x), s)] = points;
      ++points;
    }
  }
  int act(Element e, int c) const { return coset_of[group->mul(e, rep[c])]; }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

inline constexpr long kOracleMaxPoints = 1L << 20;

/// Composition by literally building X x_G Y and splitting it into (H x K)-orbits.
inline BurnsideElement compose_oracle(const BisetClass& x, const BisetClass& y) {
  require(x.right == y.left, ErrorCode::MiddleMismatch, "middle groups differ");
  auto hg = x.product();
  auto gk = y.product();
  auto hk = direct_product(x.left, y.right);
  detail::CosetAction xs(hg.group, x.stabilizer()), ys(gk.group, y.stabilizer());
  const long total = static_cast<long>(xs.points) * ys.points;
  require(total <= kOracleMaxPoints, ErrorCode::OrderBound, "oracle point set too large");
  auto idx = [&](int a, int b) { return a * ys.points + b; };
  detail::UnionFind uf(static_cast<std::size_t>(total));
  for (Element g : generating_set(x.right)) {
    Element ag = hg.pair(0, g), bg = gk.pair(g, 0);
    for (int a = 0; a < xs.points; ++a) {
      int a2 = xs.act(ag, a);
      for (int b = 0; b < ys.points; ++b) uf.unite(idx(a, b), idx(a2, ys.act(bg, b)));
    }
  }
  // (h, k) . [a, b] = [(h,1)a, (1,k)b]; orbits of H x K on the G-orbits.
  const auto& lat = lattice(hk.group);
  BurnsideElement out(x.left, y.right);
  std::vector<char> covered(static_cast<std::size_t>(total), 0);
  for (int a = 0; a < xs.points; ++a)
    for (int b = 0; b < ys.points; ++b) {
      int root = uf.find(idx(a, b));
      if (covered[root]) continue;
      ElementSet stab;
      for (int e = 0; e < hk.group.order(); ++e) {
        Element h = hk.first(static_cast<Element>(e)), k = hk.second(static_cast<Element>(e));
        int r2 = uf.find(idx(xs.act(hg.pair(h, 0), a), ys.act(gk.pair(0, k), b)));
        covered[r2] = 1;
        if (r2 == root) stab.insert(static_cast<Element>(e));
      }
      out.add(lat.class_id(stab), 1);
    }
  return out;
}

inline BurnsideElement compose_oracle(const BurnsideElement& x, const BurnsideElement& y) {
  require(x.right() == y.left(), ErrorCode::MiddleMismatch, "middle groups differ");
  BurnsideElement out(x.left(), y.right());
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      out.add(compose_oracle(BisetClass{x.left(), x.right(), i}, BisetClass{y.left(), y.right(), j}), a * b);
  return out;
}

inline BurnsideElement identity_biset(const FiniteGroup& g) {
  auto p = direct_product(g, g);
  return BurnsideElement::of_subgroup(g, g, diagonal(p));
}

// ---------------------------------------------------------------------------
// Elementary bisets

/// Ind_D^H over (H, D) with stabilizer {(d, d)}.
inline BisetClass induction(const FiniteGroup& h, const EmbeddedSubgroup& d) {
  auto p = direct_product(h, d.group);
  ElementSet s;
  for (int i = 0; i < d.group.order(); ++i) s.insert(p.pair(d.to_parent[i], static_cast<Element>(i)));
  return BisetClass::of(h, d.group, s);
}

/// Res_B^G over (B, G) with stabilizer {(b, b)}.
inline BisetClass restriction(const FiniteGroup& g, const EmbeddedSubgroup& b) {
  auto p = direct_product(b.group, g);
  ElementSet s;
  for (int i = 0; i < b.group.order(); ++i) s.insert(p.pair(static_cast<Element>(i), b.to_parent[i]));
  return BisetClass::of(b.group, g, s);
}

/// Inf_{D/C}^D over (D, D/C) with stabilizer {(d, dC)}.
inline BisetClass inflation(const QuotientGroup& q) {
  const auto& d = q.projection.domain();
  auto p = direct_product(d, q.group);
  ElementSet s;
  for (int i = 0; i < d.order(); ++i) s.insert(p.pair(static_cast<Element>(i), q.projection(static_cast<Element>(i))));
  return BisetClass::of(d, q.group, s);
}

/// Def_{B/A}^B over (B/A, B) with stabilizer {(bA, b)}.
inline BisetClass deflation(const QuotientGroup& q) {
  const auto& b = q.projection.domain();
  auto p = direct_product(q.group, b);
  ElementSet s;
  for (int i = 0; i < b.order(); ++i) s.insert(p.pair(q.projection(static_cast<Element>(i)), static_cast<Element>(i)));
  return BisetClass::of(q.group, b, s);
}

/// Iso(f) over (X, Y) for an isomorphism f: Y -> X, stabilizer {(f(y), y)}.
inline BisetClass isogation(const GroupHom& f) {
  require(f.is_bijective(), ErrorCode::InvalidInput, "isogation needs an isomorphism");
  auto p = direct_product(f.codomain(), f.domain());
  ElementSet s;
  for (int y = 0; y < f.domain().order(); ++y) s.insert(p.pair(f(static_cast<Element>(y)), static_cast<Element>(y)));
  return BisetClass::of(f.codomain(), f.domain(), s);
}

enum class ElementaryKind { Ind, Res, Inf, Def, Iso };

struct ElementaryData {
  FiniteGroup group;             // H for ind, G for res, D for inf, B for def
  ElementSet subgroup;           // D <= H, B <= G, C normal in D, A normal in B
  std::optional<GroupHom> iso;   // for Iso
};

inline BisetClass elementary_biset(ElementaryKind kind, const ElementaryData& data) {
  switch (kind) {
    case ElementaryKind::Ind: return induction(data.group, subgroup_as_group(data.group, data.subgroup));
    case ElementaryKind::Res: return restriction(data.group, subgroup_as_group(data.group, data.subgroup));
    case ElementaryKind::Inf: return inflation(quotient_group(data.group, data.subgroup));
    case ElementaryKind::Def: return deflation(quotient_group(data.group, data.subgroup));
    case ElementaryKind::Iso:
      require(data.iso.has_value(), ErrorCode::InvalidInput, "isogation needs a homomorphism");
      return isogation(*data.iso);
  }
  fail(ErrorCode::InvalidInput, "unknown elementary biset kind");
}

// ---------------------------------------------------------------------------
// Goursat data and the Bouc decomposition

struct GoursatData {
  FiniteGroup left, right;     // H, G
  ElementSet d, c, b, a;       // D = p1, C = k1 in H; B = p2, A = k2 in G
  EmbeddedSubgroup d_sub, b_sub;
  QuotientGroup d_mod_c;       // D/C
  QuotientGroup b_mod_a;       // B/A
  GroupHom f;                  // B/A -> D/C, bA -> dC for (d, b) in L
};

inline GoursatData goursat_data(const FiniteGroup& h, const FiniteGroup& g, const ElementSet& l) {
  auto p = direct_product(h, g);
  require(is_subgroup(p.group, l), ErrorCode::NotSubgroup, "not a subgroup of " + p.group.label());
  auto d = proj_left(p, l), c = kernel_left(p, l), b = proj_right(p, l), a = kernel_right(p, l);
  auto d_sub = subgroup_as_group(h, d), b_sub = subgroup_as_group(g, b);
  auto dc = quotient_group(d_sub.group, d_sub.to_local(c));
  auto ba = quotient_group(b_sub.group, b_sub.to_local(a));
  std::vector<Element> im(static_cast<std::size_t>(ba.group.order()), 0);
  l.for_each([&](Element x) {
    im[ba.projection(b_sub.local(p.second(x)))] = dc.projection(d_sub.local(p.first(x)));
  });
  auto f = GroupHom::unchecked(ba.group, dc.group, std::move(im));
  return {h, g, d, c, b, a, std::move(d_sub), std::move(b_sub), std::move(dc), std::move(ba), std::move(f)};
}

/// L = {(d, b) : f(bA) = dC}.
inline ElementSet reconstruct(const GoursatData& gd) {
  auto p = direct_product(gd.left, gd.right);
  ElementSet l;
  gd.d.for_each([&](Element d) {
    auto dc = gd.d_mod_c.projection(gd.d_sub.local(d));
    gd.b.for_each([&](Element b) {
      if (gd.f(gd.b_mod_a.projection(gd.b_sub.local(b))) == dc) l.insert(p.pair(d, b));
    });
  });
  return l;
}

/// Ind_D^H, Inf_{D/C}^D, Iso(f), Def_{B/A}^B, Res_B^G in composition order.
struct BoucWord {
  GoursatData data;
  std::vector<BisetClass> factors;
};

inline BoucWord bouc_decompose(const BisetClass& x) {
  auto gd = goursat_data(x.left, x.right, x.stabilizer());
  std::vector<BisetClass> f{induction(x.left, gd.d_sub), inflation(gd.d_mod_c), isogation(gd.f),
                            deflation(gd.b_mod_a), restriction(x.right, gd.b_sub)};
  return {std::move(gd), std::move(f)};
}

inline BurnsideElement recompose(const std::vector<BurnsideElement>& word) {
  require(!word.empty(), ErrorCode::InvalidInput, "empty biset word");
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    require(word[i].right() == word[i + 1].left(), ErrorCode::InterfaceMismatch,
            "factor " + std::to_string(i) + " does not compose with factor " + std::to_string(i + 1));
  BurnsideElement acc = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) acc = compose_bisets(acc, word[i]);
  return acc;
}

inline BurnsideElement recompose(const std::vector<BisetClass>& word) {
  std::vector<BurnsideElement> w;
  for (const auto& c : word) w.emplace_back(c);
  return recompose(w);
}

// ---------------------------------------------------------------------------
// Products, hats and opposites

/// x x y over (H x H', G x G').
inline BurnsideElement external_product(const BurnsideElement& x, const BurnsideElement& y) {
  auto ph = direct_product(x.left(), y.left());
  auto pg = direct_product(x.right(), y.right());
  auto big = direct_product(ph.group, pg.group);
  auto px = x.product(), py = y.product();
  const auto& lat = lattice(big.group);
  BurnsideElement out(ph.group, pg.group);
  for (const auto& [i, a] : x.terms()) {
    const auto& l = x.lattice_ref().class_rep(i);
    for (const auto& [j, b] : y.terms()) {
      const auto& m = y.lattice_ref().class_rep(j);
      ElementSet s;
      l.for_each([&](Element u) {
        m.for_each([&](Element v) {
          s.insert(big.pair(ph.pair(px.first(u), py.first(v)), pg.pair(px.second(u), py.second(v))));
        });
      });
      out.add(lat.class_id(s), a * b);
    }
  }
  return out;
}

/// (G, H)-biset viewed as a (G x H)-set: element of B(G x H, 1).
inline BurnsideElement hat_right(const BurnsideElement& x) {
  auto p = x.product();
  auto q = direct_product(p.group, cyclic_group(1));
  BurnsideElement out(q.left, q.right);
  for (const auto& [i, a] : x.terms()) {
    ElementSet s;
    x.lattice_ref().class_rep(i).for_each([&](Element e) { s.insert(q.pair(e, 0)); });
    out.add(lattice(q.group).class_id(s), a);
  }
  return out;
}

/// The same as an element of B(1, G x H).
inline BurnsideElement hat_left(const BurnsideElement& x) {
  auto p = x.product();
  auto q = direct_product(cyclic_group(1), p.group);
  BurnsideElement out(q.left, q.right);
  for (const auto& [i, a] : x.terms()) {
    ElementSet s;
    x.lattice_ref().class_rep(i).for_each([&](Element e) { s.insert(q.pair(0, e)); });
    out.add(lattice(q.group).class_id(s), a);
  }
  return out;
}

/// Opposite biset: (h, g) -> (g, h).
inline BurnsideElement opposite(const BurnsideElement& x) {
  auto p = x.product();
  auto q = direct_product(x.right(), x.left());
  BurnsideElement out(x.right(), x.left());
  for (const auto& [i, a] : x.terms()) {
    ElementSet s;
    x.lattice_ref().class_rep(i).for_each([&](Element e) { s.insert(q.pair(p.second(e), p.first(e))); });
    out.add(lattice(q.group).class_id(s), a);
  }
  return out;
}

/// All transitive classes over (H, G).
inline std::vector<BisetClass> transitive_classes(const FiniteGroup& h, const FiniteGroup& g) {
  const auto& lat = lattice(direct_product(h, g).group);
  std::vector<BisetClass> out;
  for (int c = 0; c < lat.class_count(); ++c) out.push_back({h, g, c});
  return out;
}

}  // namespace bisetkit
