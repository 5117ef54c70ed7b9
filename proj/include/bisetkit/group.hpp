#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bisetkit/element_set.hpp"
#include "bisetkit/error.hpp"

namespace bisetkit {

/// A finite group stored as its multiplication table. Element 0 is the identity.
/// Copies share the immutable table.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial_data()) {}

  /// Validating constructor: Latin square, identity at index 0, associativity.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& rows, std::string label) {
    const int n = static_cast<int>(rows.size());
    require(n >= 1, ErrorCode::InvalidTable, "empty table");
    require(n <= kMaxOrder, ErrorCode::OrderBound,
            "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    std::vector<Element> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      require(static_cast<int>(rows[a].size()) == n, ErrorCode::InvalidTable, "table is not square");
      for (int b = 0; b < n; ++b) {
        int v = rows[a][b];
        require(v >= 0 && v < n, ErrorCode::InvalidTable, "entry out of range");
        flat[static_cast<std::size_t>(a) * n + b] = static_cast<Element>(v);
      }
    }
    for (int a = 0; a < n; ++a) {
      std::vector<char> row_seen(n, 0), col_seen(n, 0);
      for (int b = 0; b < n; ++b) {
        auto r = flat[static_cast<std::size_t>(a) * n + b];
        auto c = flat[static_cast<std::size_t>(b) * n + a];
        require(!row_seen[r] && !col_seen[c], ErrorCode::InvalidTable, "not a Latin square");
        row_seen[r] = col_seen[c] = 1;
      }
      require(flat[a] == a && flat[static_cast<std::size_t>(a) * n] == a, ErrorCode::InvalidTable,
              "index 0 is not the identity");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto ab = flat[static_cast<std::size_t>(a) * n + b];
        for (int c = 0; c < n; ++c) {
          auto bc = flat[static_cast<std::size_t>(b) * n + c];
          if (flat[static_cast<std::size_t>(ab) * n + c] != flat[static_cast<std::size_t>(a) * n + bc])
            fail(ErrorCode::InvalidTable, "multiplication is not associative");
        }
      }
    return unchecked(n, std::move(flat), std::move(label));
  }

  /// Builds a group from a table known to be valid (products, quotients, subgroups).
  static FiniteGroup unchecked(int n, std::vector<Element> flat, std::string label) {
    require(n <= kMaxOrder, ErrorCode::OrderBound,
            "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    auto d = std::make_shared<Data>();
    d->order = n;
    d->table = std::move(flat);
    d->label = std::move(label);
    d->inverse.assign(n, 0);
    d->element_order.assign(n, 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (d->table[static_cast<std::size_t>(a) * n + b] == 0) {
          d->inverse[a] = static_cast<Element>(b);
          break;
        }
    for (int a = 0; a < n; ++a) {
      int k = 1;
      Element x = static_cast<Element>(a);
      while (x != 0) {
        x = d->table[static_cast<std::size_t>(x) * n + a];
        ++k;
      }
      d->element_order[a] = a == 0 ? 1 : k;
    }
    d->exponent = 1;
    for (int o : d->element_order) d->exponent = std::lcm(d->exponent, o);
    d->abelian = true;
    for (int a = 0; a < n && d->abelian; ++a)
      for (int b = a + 1; b < n; ++b)
        if (d->table[static_cast<std::size_t>(a) * n + b] != d->table[static_cast<std::size_t>(b) * n + a]) {
          d->abelian = false;
          break;
        }
    // FNV-1a over order and flattened table.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 2; ++i) {
        h ^= (v >> (8 * i)) & 0xFF;
        h *= 1099511628211ULL;
      }
    };
    mix(static_cast<std::uint64_t>(n));
    for (auto e : d->table) mix(e);
    d->hash = h;
    return FiniteGroup(std::move(d));
  }

  int order() const { return d_->order; }
  Element mul(Element a, Element b) const { return d_->table[static_cast<std::size_t>(a) * d_->order + b]; }
  Element inv(Element a) const { return d_->inverse[a]; }
  Element pow(Element a, long k) const {
    int o = element_order(a);
    long e = ((k % o) + o) % o;
    Element r = 0;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  /// g x g^{-1}
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  int element_order(Element a) const { return d_->element_order[a]; }
  int exponent() const { return d_->exponent; }
  bool is_abelian() const { return d_->abelian; }
  const std::string& label() const { return d_->label; }
  std::uint64_t hash() const { return d_->hash; }
  std::string hash_hex() const {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << d_->hash;
    return os.str();
  }
  const std::vector<Element>& flat_table() const { return d_->table; }
  ElementSet all() const { return ElementSet::range(order()); }

  FiniteGroup relabeled(std::string label) const {
    FiniteGroup g = *this;
    auto d = std::make_shared<Data>(*d_);
    d->label = std::move(label);
    g.d_ = std::move(d);
    return g;
  }

  bool same_table(const FiniteGroup& o) const {
    return d_ == o.d_ || (d_->hash == o.d_->hash && d_->order == o.d_->order && d_->table == o.d_->table);
  }
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.same_table(b); }

 private:
  struct Data {
    int order = 1;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<int> element_order;
    int exponent = 1;
    bool abelian = true;
    std::string label;
    std::uint64_t hash = 0;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> trivial_data() {
    static const std::shared_ptr<const Data> t = unchecked(1, {0}, "C1").d_;
    return t;
  }
  std::shared_ptr<const Data> d_;
};

namespace detail {

/// Process-wide cache of values derived from a group's table.
template <class Value>
class GroupMemo {
 public:
  template <class Fn>
  const Value& get(const FiniteGroup& g, Fn&& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(g.hash());
      if (it != map_.end())
        for (auto& [grp, val] : it->second)
          if (grp.same_table(g)) return *val;
    }
    auto value = std::make_shared<const Value>(compute());
    std::lock_guard lock(mu_);
    auto& bucket = map_[g.hash()];
    for (auto& [grp, val] : bucket)
      if (grp.same_table(g)) return *val;
    bucket.emplace_back(g, value);
    return *bucket.back().second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<FiniteGroup, std::shared_ptr<const Value>>>> map_;
};

/// Relabels a group given by a multiplication callback so that elements appear
/// in breadth-first order of generator words: identity, then words of length 1, ...
template <class Mul>
FiniteGroup canonical_from_generators(int raw_order, int raw_identity, const std::vector<int>& gens, Mul&& raw_mul,
                                      std::string label) {
  std::vector<int> order_of_raw(raw_order, -1);
  std::vector<int> raw_of;
  raw_of.push_back(raw_identity);
  order_of_raw[raw_identity] = 0;
  for (std::size_t i = 0; i < raw_of.size(); ++i)
    for (int s : gens) {
      int y = raw_mul(raw_of[i], s);
      if (order_of_raw[y] < 0) {
        order_of_raw[y] = static_cast<int>(raw_of.size());
        raw_of.push_back(y);
      }
    }
  const int n = static_cast<int>(raw_of.size());
  require(n == raw_order, ErrorCode::InvalidInput, "generators do not generate the group");
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] = static_cast<Element>(order_of_raw[raw_mul(raw_of[a], raw_of[b])]);
  return FiniteGroup::unchecked(n, std::move(flat), std::move(label));
}

}  // namespace detail

enum class GroupKind { Cyclic, Dihedral, Quaternion8, Klein4, Symmetric3 };

/// Dicyclic group of order 4n: <a, b | a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1}>.
inline FiniteGroup dicyclic_group(int n, std::string label) {
  require(n >= 2, ErrorCode::InvalidInput, "dicyclic group needs n >= 2");
  const int m = 2 * n;
  auto mul = [m, n](int x, int y) {
    int i = x % m, j = x / m, k = y % m, l = y / m;
    int e = j ? i - k : i + k;
    int t = j + l;
    if (t == 2) {
      e += n;
      t = 0;
    }
    e = ((e % m) + m) % m;
    return t * m + e;
  };
  return detail::canonical_from_generators(2 * m, 0, {1, m}, mul, std::move(label));
}

/// Closure of a set of permutations of {0..degree-1} as a multiplication table.
/// Product p*q acts as "first q, then p".
inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens, std::string label) {
  require(!gens.empty(), ErrorCode::InvalidInput, "no generators");
  const std::size_t degree = gens.front().size();
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto y = compose(elems[i], g);
      if (!index.count(y)) {
        require(static_cast<int>(elems.size()) < kMaxOrder, ErrorCode::OrderBound, "permutation group too large");
        index.emplace(y, static_cast<int>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  const int n = static_cast<int>(elems.size());
  std::vector<int> gen_ids;
  for (const auto& g : gens) gen_ids.push_back(index.at(g));
  std::vector<int> raw(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) raw[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return detail::canonical_from_generators(
      n, 0, gen_ids, [&raw, n](int a, int b) { return raw[static_cast<std::size_t>(a) * n + b]; }, std::move(label));
}

/// Standard constructions. `param` is n for Cyclic and the group order 2n for Dihedral.
inline FiniteGroup make_group(GroupKind kind, int param = 0) {
  switch (kind) {
    case GroupKind::Cyclic: {
      require(param >= 1, ErrorCode::InvalidInput, "cyclic group order must be positive");
      return detail::canonical_from_generators(
          param, 0, {param > 1 ? 1 : 0}, [param](int a, int b) { return (a + b) % param; },
          "C" + std::to_string(param));
    }
    case GroupKind::Dihedral: {
      require(param >= 4 && param % 2 == 0, ErrorCode::InvalidInput, "dihedral order must be even and >= 4");
      const int n = param / 2;
      // raw index j*n + i stands for r^i s^j
      auto mul = [n](int x, int y) {
        int i = x % n, j = x / n, k = y % n, l = y / n;
        int e = j ? i - k : i + k;
        e = ((e % n) + n) % n;
        return ((j + l) % 2) * n + e;
      };
      std::string label = param == 4 ? "V4" : param == 6 ? "S3" : "D" + std::to_string(param);
      return detail::canonical_from_generators(param, 0, {1 % n == 0 ? 0 : 1, n}, mul, label);
    }
    case GroupKind::Quaternion8:
      return dicyclic_group(2, "Q8");
    case GroupKind::Klein4:
      return detail::canonical_from_generators(4, 0, {1, 2}, [](int a, int b) { return a ^ b; }, "V4");
    case GroupKind::Symmetric3:
      return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3");
  }
  fail(ErrorCode::InvalidInput, "unknown group kind");
}

inline FiniteGroup cyclic_group(int n) { return make_group(GroupKind::Cyclic, n); }

/// G x H with row-major indexing (g, h) -> g*|H| + h.
struct DirectProduct {
  FiniteGroup left;
  FiniteGroup right;
  FiniteGroup group;

  Element pair(Element a, Element b) const { return static_cast<Element>(a * right.order() + b); }
  Element first(Element x) const { return static_cast<Element>(x / right.order()); }
  Element second(Element x) const { return static_cast<Element>(x % right.order()); }
  Element inject_left(Element a) const { return pair(a, 0); }
  Element inject_right(Element b) const { return pair(0, b); }
};

inline DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  struct Entry {
    FiniteGroup a, b, p;
  };
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::vector<Entry>> cache;
  const std::uint64_t key = a.hash() * 31 + b.hash();
  {
    std::lock_guard lock(mu);
    for (auto& e : cache[key])
      if (e.a.same_table(a) && e.b.same_table(b)) return {a, b, e.p};
  }
  const int n = a.order() * b.order();
  require(n <= kMaxOrder, ErrorCode::OrderBound,
          "direct product of order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  const int nb = b.order();
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[static_cast<std::size_t>(x) * n + y] = static_cast<Element>(
          a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
          b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  auto label = a.label() + "x" + b.label();
  auto p = FiniteGroup::unchecked(n, std::move(flat), label);
  std::lock_guard lock(mu);
  cache[key].push_back({a, b, p});
  return {a, b, p};
}

/// A homomorphism given by the image of every domain element.
class GroupHom {
 public:
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    require(static_cast<int>(images_.size()) == domain_.order(), ErrorCode::InvalidInput, "image list has wrong length");
    for (auto e : images_) require(e < codomain_.order(), ErrorCode::InvalidInput, "image out of range");
    for (int x = 0; x < domain_.order(); ++x)
      for (int y = 0; y < domain_.order(); ++y)
        if (images_[domain_.mul(static_cast<Element>(x), static_cast<Element>(y))] !=
            codomain_.mul(images_[x], images_[y]))
          fail(ErrorCode::InvalidInput, "map is not a homomorphism");
  }

  static GroupHom identity(const FiniteGroup& g) {
    std::vector<Element> im(g.order());
    std::iota(im.begin(), im.end(), Element{0});
    return unchecked(g, g, std::move(im));
  }

  static GroupHom unchecked(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images) {
    GroupHom h;
    h.domain_ = std::move(domain);
    h.codomain_ = std::move(codomain);
    h.images_ = std::move(images);
    return h;
  }

  Element operator()(Element x) const { return images_[x]; }
  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<Element>& images() const { return images_; }

  ElementSet kernel() const {
    ElementSet k;
    for (int x = 0; x < domain_.order(); ++x)
      if (images_[x] == 0) k.insert(static_cast<Element>(x));
    return k;
  }
  ElementSet image() const {
    ElementSet s;
    for (auto e : images_) s.insert(e);
    return s;
  }
  bool is_injective() const { return kernel().size() == 1; }
  bool is_surjective() const { return image().size() == codomain_.order(); }
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// next o this
  GroupHom then(const GroupHom& next) const {
    require(next.domain_ == codomain_, ErrorCode::InterfaceMismatch, "homomorphisms do not compose");
    std::vector<Element> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = next.images_[images_[i]];
    return unchecked(domain_, next.codomain_, std::move(im));
  }

  GroupHom inverse() const {
    require(is_bijective(), ErrorCode::InvalidInput, "homomorphism is not invertible");
    std::vector<Element> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<Element>(i);
    return unchecked(codomain_, domain_, std::move(im));
  }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }

 private:
  GroupHom() = default;
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Element> images_;
};

// ---------------------------------------------------------------------------
// Subsets and subgroups

inline ElementSet closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  ElementSet s = ElementSet::singleton(0);
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element t : gens) {
      Element y = g.mul(queue[i], t);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(y);
      }
    }
  return s;
}

inline ElementSet cyclic_subgroup(const FiniteGroup& g, Element x) { return closure(g, {x}); }

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  bool ok = true;
  auto members = s.to_vector();
  for (Element a : members) {
    if (a >= g.order()) return false;
    for (Element b : members)
      if (!s.contains(g.mul(a, b))) {
        ok = false;
        break;
      }
    if (!ok) break;
  }
  return ok;
}

inline ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, Element x) {
  ElementSet r;
  s.for_each([&](Element e) { r.insert(g.conj(x, e)); });
  return r;
}

inline bool is_normal(const FiniteGroup& g, const ElementSet& n) {
  for (int x = 0; x < g.order(); ++x)
    if (!(conjugate_set(g, n, static_cast<Element>(x)) == n)) return false;
  return true;
}

inline ElementSet center(const FiniteGroup& g) {
  ElementSet z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      central = g.mul(static_cast<Element>(a), static_cast<Element>(b)) ==
                g.mul(static_cast<Element>(b), static_cast<Element>(a));
    if (central) z.insert(static_cast<Element>(a));
  }
  return z;
}

inline ElementSet normalizer(const FiniteGroup& g, const ElementSet& s) {
  ElementSet n;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_set(g, s, static_cast<Element>(x)) == s) n.insert(static_cast<Element>(x));
  return n;
}

/// A subgroup of a parent group; members are element indices of the parent.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, ElementSet members) : parent_(std::move(parent)), members_(members) {
    require(is_subgroup(parent_, members_), ErrorCode::NotSubgroup, "set is not a subgroup of " + parent_.label());
  }
  static Subgroup whole(const FiniteGroup& g) { return Subgroup(g, g.all(), 0); }
  static Subgroup trivial(const FiniteGroup& g) { return Subgroup(g, ElementSet::singleton(0), 0); }
  static Subgroup generated(const FiniteGroup& g, const std::vector<Element>& gens) {
    return Subgroup(g, closure(g, gens), 0);
  }

  const FiniteGroup& parent() const { return parent_; }
  const ElementSet& members() const { return members_; }
  int order() const { return members_.size(); }
  bool contains(Element e) const { return members_.contains(e); }
  std::vector<Element> elements() const { return members_.to_vector(); }
  bool is_normal() const { return bisetkit::is_normal(parent_, members_); }
  bool is_cyclic() const {
    bool cyc = false;
    members_.for_each([&](Element e) { cyc = cyc || parent_.element_order(e) == order(); });
    return cyc;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  Subgroup(FiniteGroup parent, ElementSet members, int) : parent_(std::move(parent)), members_(members) {}
  FiniteGroup parent_;
  ElementSet members_;
};

/// A subgroup turned into a group of its own; elements keep their relative order.
struct EmbeddedSubgroup {
  FiniteGroup group;
  std::vector<Element> to_parent;
  std::vector<int> from_parent;  // -1 outside the subgroup

  Element local(Element parent_element) const {
    int v = from_parent[parent_element];
    require(v >= 0, ErrorCode::InvalidInput, "element is outside the subgroup");
    return static_cast<Element>(v);
  }
  ElementSet to_local(const ElementSet& s) const {
    ElementSet r;
    s.for_each([&](Element e) { r.insert(local(e)); });
    return r;
  }
  ElementSet to_parent_set(const ElementSet& s) const {
    ElementSet r;
    s.for_each([&](Element e) { r.insert(to_parent[e]); });
    return r;
  }
};

inline EmbeddedSubgroup subgroup_as_group(const FiniteGroup& g, const ElementSet& s, std::string label = {}) {
  require(is_subgroup(g, s), ErrorCode::NotSubgroup, "set is not a subgroup");
  EmbeddedSubgroup e;
  e.to_parent = s.to_vector();
  e.from_parent.assign(g.order(), -1);
  const int n = static_cast<int>(e.to_parent.size());
  for (int i = 0; i < n; ++i) e.from_parent[e.to_parent[i]] = i;
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] =
          static_cast<Element>(e.from_parent[g.mul(e.to_parent[a], e.to_parent[b])]);
  if (label.empty()) label = n == g.order() ? g.label() : "sub" + std::to_string(n) + "(" + g.label() + ")";
  e.group = FiniteGroup::unchecked(n, std::move(flat), std::move(label));
  return e;
}

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;
  std::vector<Element> coset_reps;  // least element of each coset
};

/// G/N with cosets ordered by their least element.
inline QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& n, std::string label = {}) {
  require(is_subgroup(g, n), ErrorCode::NotSubgroup, "kernel is not a subgroup");
  require(is_normal(g, n), ErrorCode::NotNormal, "subgroup is not normal in " + g.label());
  std::vector<int> coset(g.order(), -1);
  std::vector<Element> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Element>(x));
    n.for_each([&](Element k) { coset[g.mul(static_cast<Element>(x), k)] = id; });
  }
  const int q = static_cast<int>(reps.size());
  std::vector<Element> flat(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) flat[static_cast<std::size_t>(a) * q + b] = static_cast<Element>(coset[g.mul(reps[a], reps[b])]);
  if (label.empty()) label = q == 1 ? "C1" : g.label() + "/N" + std::to_string(n.size());
  auto qg = FiniteGroup::unchecked(q, std::move(flat), std::move(label));
  std::vector<Element> images(g.order());
  for (int x = 0; x < g.order(); ++x) images[x] = static_cast<Element>(coset[x]);
  return {qg, GroupHom::unchecked(g, qg, std::move(images)), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Conjugacy classes of elements

struct ElementClasses {
  std::vector<std::vector<Element>> classes;  // class 0 is {identity}; ordered by least element
  std::vector<int> class_of;

  int count() const { return static_cast<int>(classes.size()); }
  Element rep(int c) const { return classes[c].front(); }
  int size(int c) const { return static_cast<int>(classes[c].size()); }
};

inline const ElementClasses& element_classes(const FiniteGroup& g) {
  static detail::GroupMemo<ElementClasses> memo;
  return memo.get(g, [&] {
    ElementClasses ec;
    ec.class_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
      if (ec.class_of[x] >= 0) continue;
      int id = ec.count();
      ec.classes.emplace_back();
      for (int y = 0; y < g.order(); ++y) {
        Element c = g.conj(static_cast<Element>(y), static_cast<Element>(x));
        if (ec.class_of[c] < 0) {
          ec.class_of[c] = id;
          ec.classes.back().push_back(c);
        }
      }
      std::sort(ec.classes.back().begin(), ec.classes.back().end());
    }
    return ec;
  });
}

}  // namespace bisetkit
