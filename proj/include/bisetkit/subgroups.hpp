#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "bisetkit/group.hpp"

namespace bisetkit {

struct SubgroupClass {
  ElementSet representative;          // least member in (size, list) order
  std::vector<int> members;           // subgroup ids, ascending
  int size() const { return representative.size(); }
};

/// All subgroups of a group, sorted by (size, member list), with conjugacy classes.
struct SubgroupLattice {
  FiniteGroup group;
  std::vector<ElementSet> subgroups;
  std::unordered_map<ElementSet, int, ElementSetHash> index;
  std::vector<SubgroupClass> classes;  // ordered by representative
  std::vector<int> class_of;           // subgroup id -> class id

  int id_of(const ElementSet& s) const {
    auto it = index.find(s);
    require(it != index.end(), ErrorCode::NotSubgroup, "set is not a subgroup of " + group.label());
    return it->second;
  }
  int class_id(const ElementSet& s) const { return class_of[id_of(s)]; }
  int count() const { return static_cast<int>(subgroups.size()); }
  int class_count() const { return static_cast<int>(classes.size()); }
  const ElementSet& class_rep(int c) const { return classes[c].representative; }
};

namespace detail {

inline std::mutex& cache_dir_mutex() {
  static std::mutex m;
  return m;
}
inline std::string& cache_dir_ref() {
  static std::string dir;
  return dir;
}

inline std::size_t& order_bound_ref() {
  static std::size_t bound = kMaxOrder;
  return bound;
}

/// Cyclic subgroups together with one generator each, deduplicated.
inline std::vector<std::pair<ElementSet, Element>> cyclic_subgroups_with_generators(const FiniteGroup& g,
                                                                                    const ElementSet& within) {
  std::vector<std::pair<ElementSet, Element>> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  within.for_each([&](Element x) {
    auto z = cyclic_subgroup(g, x);
    if (seen.insert(z).second) out.emplace_back(z, x);
  });
  return out;
}

inline ElementSet closure_with(const FiniteGroup& g, const ElementSet& base, const std::vector<Element>& gens) {
  ElementSet s = base;
  std::vector<Element> queue = base.to_vector();
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

}  // namespace detail

/// Directory for the on-disk lattice cache; empty disables it.
inline void set_cache_dir(std::string dir) {
  std::lock_guard lock(detail::cache_dir_mutex());
  detail::cache_dir_ref() = std::move(dir);
}
inline std::string cache_dir() {
  std::lock_guard lock(detail::cache_dir_mutex());
  return detail::cache_dir_ref();
}

/// Largest group order for which full subgroup lattices are built.
inline void set_order_bound(int bound) {
  require(bound >= 1 && bound <= kMaxOrder, ErrorCode::InvalidInput, "order bound must be in 1..256");
  detail::order_bound_ref() = static_cast<std::size_t>(bound);
}
inline int order_bound() { return static_cast<int>(detail::order_bound_ref()); }

/// Subgroups satisfying a hereditary predicate (closed under taking subgroups),
/// found by cyclic extension from the trivial subgroup. Candidates are restricted
/// to elements of `within`. Result sorted by (size, member list).
inline std::vector<ElementSet> constrained_subgroups(const FiniteGroup& g, const ElementSet& within,
                                                     const std::function<bool(const ElementSet&)>& keep) {
  auto cyclics = detail::cyclic_subgroups_with_generators(g, within);
  std::vector<std::pair<ElementSet, Element>> usable;
  for (auto& c : cyclics)
    if (keep(c.first)) usable.push_back(c);

  std::vector<ElementSet> found{ElementSet::singleton(0)};
  std::vector<std::vector<Element>> gens{{}};
  std::unordered_set<ElementSet, ElementSetHash> seen{found.front()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet s = found[i];
    const auto base_gens = gens[i];
    for (const auto& [z, x] : usable) {
      if (z.is_subset_of(s)) continue;
      auto t = detail::closure_with(g, s, [&] {
        auto v = base_gens;
        v.push_back(x);
        return v;
      }());
      if (!t.is_subset_of(within) || seen.count(t) || !keep(t)) continue;
      seen.insert(t);
      auto tg = base_gens;
      tg.push_back(x);
      found.push_back(t);
      gens.push_back(std::move(tg));
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  return found;
}

namespace detail {

inline void fill_index_and_classes(SubgroupLattice& lat) {
  const auto& g = lat.group;
  lat.index.clear();
  for (int i = 0; i < lat.count(); ++i) lat.index.emplace(lat.subgroups[i], i);
  lat.class_of.assign(lat.subgroups.size(), -1);
  lat.classes.clear();
  for (int i = 0; i < lat.count(); ++i) {
    if (lat.class_of[i] >= 0) continue;
    SubgroupClass cls;
    cls.representative = lat.subgroups[i];
    const int cid = lat.class_count();
    if (g.is_abelian()) {
      cls.members = {i};
      lat.class_of[i] = cid;
    } else {
      const auto& s = lat.subgroups[i];
      auto norm = normalizer(g, s);
      // one conjugate per left coset of the normalizer
      ElementSet done;
      for (int x = 0; x < g.order(); ++x) {
        if (done.contains(static_cast<Element>(x))) continue;
        norm.for_each([&](Element n) { done.insert(g.mul(static_cast<Element>(x), n)); });
        int id = lat.id_of(conjugate_set(g, s, static_cast<Element>(x)));
        if (lat.class_of[id] < 0) {
          lat.class_of[id] = cid;
          cls.members.push_back(id);
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
    }
    lat.classes.push_back(std::move(cls));
  }
}

inline std::optional<SubgroupLattice> load_cached_lattice(const FiniteGroup& g, const std::string& dir) {
  namespace fs = std::filesystem;
  auto path = fs::path(dir) / ("lattice-" + g.hash_hex() + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("order").get<int>() != g.order() || j.at("hash").get<std::string>() != g.hash_hex()) return std::nullopt;
    SubgroupLattice lat;
    lat.group = g;
    for (const auto& s : j.at("subgroups")) {
      ElementSet set;
      for (int e : s) {
        if (e < 0 || e >= g.order()) return std::nullopt;
        set.insert(static_cast<Element>(e));
      }
      lat.subgroups.push_back(set);
    }
    for (int i = 0; i < lat.count(); ++i) lat.index.emplace(lat.subgroups[i], i);
    lat.class_of.assign(lat.subgroups.size(), -1);
    for (const auto& c : j.at("classes")) {
      SubgroupClass cls;
      for (int id : c) {
        if (id < 0 || id >= lat.count()) return std::nullopt;
        cls.members.push_back(id);
        lat.class_of[id] = lat.class_count();
      }
      if (cls.members.empty()) return std::nullopt;
      cls.representative = lat.subgroups[cls.members.front()];
      lat.classes.push_back(std::move(cls));
    }
    for (int c : lat.class_of)
      if (c < 0) return std::nullopt;
    return lat;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

inline void store_cached_lattice(const SubgroupLattice& lat, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;
  nlohmann::json j;
  j["order"] = lat.group.order();
  j["hash"] = lat.group.hash_hex();
  auto subs = nlohmann::json::array();
  for (const auto& s : lat.subgroups) subs.push_back(s.to_vector());
  j["subgroups"] = std::move(subs);
  auto cls = nlohmann::json::array();
  for (const auto& c : lat.classes) cls.push_back(c.members);
  j["classes"] = std::move(cls);
  auto final_path = fs::path(dir) / ("lattice-" + lat.group.hash_hex() + ".json");
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  fs::rename(tmp, final_path, ec);
}

}  // namespace detail

/// The memoized subgroup lattice of G.
inline const SubgroupLattice& lattice(const FiniteGroup& g) {
  require(g.order() <= order_bound(), ErrorCode::OrderBound,
          "subgroup lattice of order " + std::to_string(g.order()) + " exceeds bound " +
              std::to_string(order_bound()));
  static detail::GroupMemo<SubgroupLattice> memo;
  return memo.get(g, [&] {
    auto dir = cache_dir();
    if (!dir.empty())
      if (auto cached = detail::load_cached_lattice(g, dir)) return std::move(*cached);
    SubgroupLattice lat;
    lat.group = g;
    lat.subgroups = constrained_subgroups(g, g.all(), [](const ElementSet&) { return true; });
    detail::fill_index_and_classes(lat);
    if (!dir.empty()) detail::store_cached_lattice(lat, dir);
    return lat;
  });
}

inline std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (const auto& s : lattice(g).subgroups) out.emplace_back(g, s);
  return out;
}

inline const std::vector<SubgroupClass>& subgroup_classes(const FiniteGroup& g) { return lattice(g).classes; }

/// One representative (the least element index) per double coset U g V.
inline std::vector<Element> double_cosets(const FiniteGroup& g, const ElementSet& u, const ElementSet& v) {
  require(is_subgroup(g, u) && is_subgroup(g, v), ErrorCode::NotSubgroup, "double coset arguments must be subgroups");
  std::vector<Element> reps;
  ElementSet done;
  auto uv = u.to_vector();
  auto vv = v.to_vector();
  for (int x = 0; x < g.order(); ++x) {
    if (done.contains(static_cast<Element>(x))) continue;
    reps.push_back(static_cast<Element>(x));
    for (Element a : uv) {
      Element ax = g.mul(a, static_cast<Element>(x));
      for (Element b : vv) done.insert(g.mul(ax, b));
    }
  }
  return reps;
}

inline std::vector<Element> double_cosets(const Subgroup& u, const Subgroup& v) {
  require(u.parent() == v.parent(), ErrorCode::NotSubgroup, "subgroups of different groups");
  return double_cosets(u.parent(), u.members(), v.members());
}

/// Conjugacy classes of cyclic subgroups, in lattice class order.
inline std::vector<int> cyclic_class_ids(const FiniteGroup& g) {
  const auto& lat = lattice(g);
  std::vector<int> out;
  for (int c = 0; c < lat.class_count(); ++c) {
    bool cyc = false;
    const int n = lat.classes[c].size();
    lat.classes[c].representative.for_each([&](Element e) { cyc = cyc || g.element_order(e) == n; });
    if (cyc) out.push_back(c);
  }
  return out;
}

}  // namespace bisetkit
