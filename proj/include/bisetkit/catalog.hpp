#pragma once

#include <cctype>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisetkit/group.hpp"
#include "bisetkit/homs.hpp"

namespace bisetkit {

inline constexpr int kCatalogMaxOrder = 15;

struct CatalogEntry {
  int order = 0;
  std::string name;
  FiniteGroup group;
};

inline FiniteGroup alternating4() {
  return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
}

inline FiniteGroup named_product(const FiniteGroup& a, const FiniteGroup& b, std::string label) {
  return direct_product(a, b).group.relabeled(std::move(label));
}

namespace detail {

inline std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&c](FiniteGroup g) { c.push_back({g.order(), g.label(), std::move(g)}); };
  auto cyc = [](int n) { return cyclic_group(n); };
  for (int n = 1; n <= kCatalogMaxOrder; ++n) {
    add(cyc(n));
    switch (n) {
      case 4: add(make_group(GroupKind::Klein4)); break;
      case 6: add(make_group(GroupKind::Symmetric3)); break;
      case 8:
        add(named_product(cyc(4), cyc(2), "C4xC2"));
        add(named_product(named_product(cyc(2), cyc(2), "C2xC2"), cyc(2), "C2^3"));
        add(make_group(GroupKind::Dihedral, 8));
        add(make_group(GroupKind::Quaternion8));
        break;
      case 9: add(named_product(cyc(3), cyc(3), "C3xC3")); break;
      case 10: add(make_group(GroupKind::Dihedral, 10)); break;
      case 12:
        add(named_product(cyc(6), cyc(2), "C6xC2"));
        add(make_group(GroupKind::Dihedral, 12));
        add(alternating4());
        add(dicyclic_group(3, "Dic12"));
        break;
      case 14: add(make_group(GroupKind::Dihedral, 14)); break;
      default: break;
    }
  }
  return c;
}

struct CatalogState {
  std::mutex mu;
  std::vector<CatalogEntry> entries = builtin_catalog();
};

inline CatalogState& catalog_state() {
  static CatalogState s;
  return s;
}

}  // namespace detail

inline std::vector<CatalogEntry> catalog_entries() {
  auto& s = detail::catalog_state();
  std::lock_guard lock(s.mu);
  return s.entries;
}

/// One representative per isomorphism class of order n, n <= 15.
inline std::vector<FiniteGroup> groups_of_order(int n) {
  require(n >= 1, ErrorCode::InvalidInput, "order must be positive");
  require(n <= kCatalogMaxOrder, ErrorCode::OutOfCatalog,
          "catalog covers orders 1.." + std::to_string(kCatalogMaxOrder) + ", asked for " + std::to_string(n));
  std::vector<FiniteGroup> out;
  for (auto& e : catalog_entries())
    if (e.order == n) out.push_back(e.group);
  return out;
}

/// Catalog groups with order < n, grouped by ascending order.
inline std::vector<FiniteGroup> groups_smaller_than(int n) {
  std::vector<FiniteGroup> out;
  for (int k = 1; k < n; ++k) {
    auto gs = groups_of_order(k);
    require(!gs.empty(), ErrorCode::CatalogInsufficient, "no catalog group of order " + std::to_string(k));
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

/// Adds entries from a JSON document: one object {"order","name","table"} or an array of them.
/// Entries isomorphic to an existing group of the same order are rejected.
inline void load_catalog_overrides(const nlohmann::json& doc) {
  auto add_one = [](const nlohmann::json& e) {
    require(e.is_object() && e.contains("order") && e.contains("name") && e.contains("table"),
            ErrorCode::InvalidInput, "catalog entry needs order, name and table");
    int order = e.at("order").get<int>();
    require(order >= 1 && order <= kCatalogMaxOrder, ErrorCode::OutOfCatalog, "catalog override order out of range");
    auto rows = e.at("table").get<std::vector<std::vector<int>>>();
    auto g = FiniteGroup::from_table(rows, e.at("name").get<std::string>());
    require(g.order() == order, ErrorCode::InvalidTable, "table size does not match order");
    auto& s = detail::catalog_state();
    std::lock_guard lock(s.mu);
    for (auto& existing : s.entries)
      if (existing.order == order && is_isomorphic(existing.group, g))
        fail(ErrorCode::InvalidInput, "override " + g.label() + " is isomorphic to " + existing.name);
    auto pos = std::find_if(s.entries.begin(), s.entries.end(), [&](const CatalogEntry& x) { return x.order > order; });
    s.entries.insert(pos, CatalogEntry{order, g.label(), g});
  };
  if (doc.is_array())
    for (const auto& e : doc) add_one(e);
  else
    add_one(doc);
}

inline void load_catalog_overrides_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::InvalidInput, "cannot open catalog override file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::InvalidInput, std::string("bad catalog override JSON: ") + ex.what());
  }
  load_catalog_overrides(doc);
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline bool parse_positive(const std::string& s, int& out) {
  if (s.empty() || s.size() > 4) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  out = std::stoi(s);
  return out >= 1;
}

}  // namespace detail

/// Resolves names such as C6, V4, S3, D8, Q8, D10, D12, A4, Dic12, C4xC2,
/// prod(A,B) and any catalog entry name.
inline FiniteGroup group_by_name(const std::string& raw) {
  const std::string name = detail::trim(raw);
  require(!name.empty(), ErrorCode::UnknownGroup, "empty group name");
  if (name.rfind("prod(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(5, name.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        auto a = group_by_name(inner.substr(0, i));
        auto b = group_by_name(inner.substr(i + 1));
        return direct_product(a, b).group;
      }
    }
    fail(ErrorCode::UnknownGroup, "malformed product '" + name + "'");
  }
  int n = 0;
  if (name == "V4") return make_group(GroupKind::Klein4);
  if (name == "S3") return make_group(GroupKind::Symmetric3);
  if (name == "Q8") return make_group(GroupKind::Quaternion8);
  if (name == "A4") return alternating4();
  if (name[0] == 'C' && detail::parse_positive(name.substr(1), n)) {
    require(n <= kMaxOrder, ErrorCode::OrderBound, "cyclic group too large");
    return cyclic_group(n);
  }
  if (name[0] == 'D' && detail::parse_positive(name.substr(1), n) && n % 2 == 0 && n >= 6) {
    require(n <= kMaxOrder, ErrorCode::OrderBound, "dihedral group too large");
    return make_group(GroupKind::Dihedral, n);
  }
  if (name.rfind("Dic", 0) == 0 && detail::parse_positive(name.substr(3), n) && n % 4 == 0 && n >= 8) {
    require(n <= kMaxOrder, ErrorCode::OrderBound, "dicyclic group too large");
    return dicyclic_group(n / 4, name);
  }
  for (auto& e : catalog_entries())
    if (e.name == name) return e.group;
  fail(ErrorCode::UnknownGroup, "unknown group '" + name + "'");
}

}  // namespace bisetkit
