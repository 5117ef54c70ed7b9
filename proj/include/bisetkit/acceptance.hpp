#pragma once

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/catalog.hpp"
#include "bisetkit/characters.hpp"
#include "bisetkit/dress.hpp"
#include "bisetkit/green.hpp"

namespace bisetkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace acceptance {

inline std::vector<FiniteGroup> six_small_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), make_group(GroupKind::Klein4),
          make_group(GroupKind::Symmetric3)};
}

inline std::vector<FiniteGroup> catalog_up_to(int n) {
  std::vector<FiniteGroup> out;
  for (int k = 1; k <= n; ++k)
    for (auto& g : groups_of_order(k)) out.push_back(g);
  return out;
}

inline CriterionResult mackey_vs_oracle() {
  CriterionResult r{1, "biset composition equals the orbit oracle", true, {}, 0};
  long pairs = 0, bad = 0;
  auto gs = six_small_groups();
  for (auto& h : gs)
    for (auto& g : gs)
      for (auto& k : gs) {
        auto xs = transitive_classes(h, g), ys = transitive_classes(g, k);
        for (auto& x : xs)
          for (auto& y : ys) {
            ++pairs;
            if (!(compose_transitive(x, y) == compose_oracle(x, y))) ++bad;
          }
      }
  r.pass = bad == 0;
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
  return r;
}

inline CriterionResult bouc_round_trip() {
  CriterionResult r{2, "Bouc decomposition round trip", true, {}, 0};
  long classes = 0, bad = 0;
  auto gs = catalog_up_to(8);
  for (auto& h : gs)
    for (auto& g : gs)
      for (auto& x : transitive_classes(h, g)) {
        ++classes;
        if (!(recompose(bouc_decompose(x).factors) == BurnsideElement(x))) ++bad;
      }
  r.pass = bad == 0;
  r.detail = std::to_string(gs.size() * gs.size()) + " pairs, " + std::to_string(classes) + " classes, " +
             std::to_string(bad) + " failures";
  return r;
}

inline CriterionResult rb_out() {
  CriterionResult r{3, "RB quotient dimension equals |Out(H)|", true, {}, 0};
  std::ostringstream d;
  for (auto h : {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), make_group(GroupKind::Klein4),
                 cyclic_group(5), make_group(GroupKind::Symmetric3)}) {
    auto rep = check_out_iso(h);
    r.pass = r.pass && rep.match;
    d << h.label() << ":" << rep.quotient_dim << "/" << rep.out_order << " ";
  }
  r.detail = d.str();
  return r;
}

inline CriterionResult ell_kernel() {
  CriterionResult r{4, "kernel of l_H is the ideal generated by the x_n", true, {}, 0};
  std::ostringstream d;
  for (long m : {1L, 2L, 3L, 4L, 6L, 8L}) {
    auto rep = ell_kernel_report(m);
    r.pass = r.pass && rep.match;
    d << "m=" << m << " ker " << rep.ell_kernel_dim << "/" << rep.xn_ideal_dim << " quot " << rep.quotient_dim << "/"
      << rep.primitive_count << "; ";
  }
  r.detail = d.str();
  return r;
}

/// Primitive characters of (Z/mZ)^x by the closed form: multiplicative, p - 2
/// at p and p^k - 2p^{k-1} + p^{k-2} at p^k for k >= 2.
inline long primitive_count_formula(long m) {
  long out = 1;
  for (long p = 2; m > 1; ++p) {
    if (m % p) continue;
    long pk = 1;
    int k = 0;
    for (; m % p == 0; m /= p, pk *= p) ++k;
    out *= k == 1 ? p - 2 : pk - 2 * (pk / p) + pk / (p * p);
  }
  return out;
}

inline CriterionResult seed_counts() {
  CriterionResult r{5, "primitive characters agree with the x_n quotient", true, {}, 0};
  auto seeds = seeds_kRQ(12);
  std::vector<int> by_m(13, 0);
  for (auto& s : seeds) ++by_m[static_cast<std::size_t>(s.m)];
  std::ostringstream d;
  for (long m = 1; m <= 12; ++m) {
    int other = seed_count_by_ideal(m);
    const int seeds_m = by_m[static_cast<std::size_t>(m)];
    const bool ok = other == seeds_m && primitive_count_formula(m) == seeds_m;
    r.pass = r.pass && ok;
    d << m << ":" << seeds_m << (ok ? "" : "!") << " ";
  }
  r.detail = d.str();
  return r;
}

inline CriterionResult crc_span() {
  CriterionResult r{6, "CR_C(G x K) is spanned by products of irreducibles", true, {}, 0};
  auto gs = catalog_up_to(kCatalogMaxOrder);
  int pairs = 0, bad = 0;
  for (auto& g : gs)
    for (auto& k : gs) {
      if (g.order() * k.order() > 36) continue;
      ++pairs;
      if (!crc_product_span(g, k).match) ++bad;
    }
  r.pass = bad == 0;
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
  return r;
}

/// Coefficient of Delta_sigma(H) in C o D for cyclic C <= H x K, D <= K x H.
inline CriterionResult twisted_diagonal_coefficients() {
  CriterionResult r{7, "coefficient |K|/|H| for H = C4, K = C2", true, {}, 0};
  auto h = cyclic_group(4), k = cyclic_group(2);
  auto hk = direct_product(h, k), kh = direct_product(k, h), hh = direct_product(h, h);
  const auto& lat_hk = lattice(hk.group);
  const auto& lat_kh = lattice(kh.group);
  const auto& lat_hh = lattice(hh.group);
  auto auts = automorphisms(h);
  int cases = 0, nonzero = 0, bad = 0;
  for (int ci : cyclic_class_ids(hk.group))
    for (int di : cyclic_class_ids(kh.group)) {
      const auto& c = lat_hk.class_rep(ci);
      const auto& d = lat_kh.class_rep(di);
      auto q = artin_coefficients(
          compose_characters(h, k, h, perm_character(hk.group, c), perm_character(kh.group, d)));
      for (const auto& sigma : auts.all) {
        bool cond = proj_left(hk, c).size() == h.order() && proj_right(kh, d).size() == h.order();
        bool paired = false;
        for (int a = 0; a < h.order() && cond && !paired; ++a)
          for (int x = 0; x < k.order() && !paired; ++x)
            paired = cyclic_subgroup(hk.group, hk.pair(static_cast<Element>(a), static_cast<Element>(x))) == c &&
                     cyclic_subgroup(kh.group, kh.pair(static_cast<Element>(x), sigma(static_cast<Element>(a)))) == d;
        cond = cond && paired;
        Rational expect = cond ? make_rational(k.order(), h.order()) : Rational(0);
        Rational got = q.coeff(lat_hh.class_id(twisted_diagonal(hh, sigma)));
        ++cases;
        nonzero += cond;
        if (got != expect) ++bad;
      }
    }
  r.pass = bad == 0 && nonzero > 0;
  r.detail = std::to_string(cases) + " (C, D, sigma) cases, " + std::to_string(nonzero) + " with coefficient 1/2, " +
             std::to_string(bad) + " mismatches";
  return r;
}

inline CriterionResult dress_vs_oracle() {
  CriterionResult r{8, "3-set Mackey formula equals the orbit oracle", true, {}, 0};
  std::vector<FiniteGroup> gs{cyclic_group(1), cyclic_group(2), cyclic_group(3)};
  long pairs = 0, bad = 0;
  for (auto c : {cyclic_group(2), cyclic_group(3)})
    for (auto& g : gs)
      for (auto& l : gs)
        for (auto& k : gs) {
          auto pe = triple_product(g, l, c), pd = triple_product(l, k, c);
          for (auto& x : dress_transitive_classes(pe))
            for (auto& y : dress_transitive_classes(pd)) {
              ++pairs;
              if (!(dress_compose(x, y) == dress_oracle(x, y))) ++bad;
            }
        }
  r.pass = bad == 0;
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
  return r;
}

inline CriterionResult d_theta_zeta_survives() {
  CriterionResult r{9, "D_{id,1} does not factor through smaller groups", true, {}, 0};
  std::ostringstream d;
  auto c = cyclic_group(2);
  for (auto g : {cyclic_group(2), cyclic_group(3)}) {
    auto dz = d_theta_zeta(g, c, GroupHom::identity(g), trivial_hom(c, g));
    bool pruned = !is_star_decomposable(dz, g.order() - 1, SearchMode::Pruned).has_value();
    bool exhaustive = !is_star_decomposable(dz, g.order() - 1, SearchMode::Exhaustive).has_value();
    r.pass = r.pass && pruned && exhaustive;
    d << g.label() << ": pruned " << (pruned ? "none" : "FOUND") << ", exhaustive " << (exhaustive ? "none" : "FOUND")
      << "; ";
  }
  r.detail = d.str();
  return r;
}

inline CriterionResult no_bridge() {
  CriterionResult r{10, "no bridge between C4 and V4 for C of prime order", true, {}, 0};
  std::ostringstream d;
  for (auto c : {cyclic_group(2), cyclic_group(3)}) {
    auto rep = no_bridge_check(cyclic_group(4), make_group(GroupKind::Klein4), c);
    d << "C=" << c.label() << ": " << rep.bridges << " bridges; ";
  }
  r.detail = d.str();
  return r;
}

inline CriterionResult counterexample() {
  CriterionResult r{11, "Q8 / D8 / C4 example does not factor", true, {}, 0};
  auto rep = counterexample_check();
  r.pass = !rep.decomposable;
  r.detail = "|T|=" + std::to_string(rep.t_order) + " |Ker tau|=" + std::to_string(rep.kernel_order) +
             " order-4 candidates=" + std::to_string(rep.order4_candidates) +
             " normal=" + std::to_string(rep.normal_order4_candidates) + " verdict " +
             rep.transcript["verdict"].get<std::string>();
  return r;
}

}  // namespace acceptance

/// Runs every criterion; a thrown Error fails that criterion only.
inline std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {}) {
  using Fn = CriterionResult (*)();
  const std::vector<std::pair<int, Fn>> all{
      {1, acceptance::mackey_vs_oracle}, {2, acceptance::bouc_round_trip},    {3, acceptance::rb_out},
      {4, acceptance::ell_kernel},       {5, acceptance::seed_counts},        {6, acceptance::crc_span},
      {7, acceptance::twisted_diagonal_coefficients}, {8, acceptance::dress_vs_oracle},   {9, acceptance::d_theta_zeta_survives},
      {10, acceptance::no_bridge},       {11, acceptance::counterexample}};
  std::vector<CriterionResult> out;
  for (auto& [id, fn] : all) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const Error& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string(error_code_name(e.code())) + ": " + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline void print_result(std::ostream& os, const CriterionResult& r) {
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " -- " << r.detail << " ("
     << static_cast<long>(r.seconds * 1000) << " ms)\n";
}

}  // namespace bisetkit
