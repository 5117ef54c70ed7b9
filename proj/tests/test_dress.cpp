#include <catch_amalgamated.hpp>

#include "bisetkit/bisetkit.hpp"

using namespace bisetkit;

namespace {

auto code_is(ErrorCode c) {
  return Catch::Matchers::Predicate<Error>([c](const Error& e) { return e.code() == c; },
                                           "error code " + std::string(error_code_name(c)));
}

Element element_of_order(const FiniteGroup& g, int n) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<Element>(x)) == n) return static_cast<Element>(x);
  FAIL("no element of order " << n);
  return 0;
}

// E * D by definition: (g,k,c) with (g,l,c) in E and (l,k,c) in D for some l.
ElementSet star_by_definition(const TripleProduct& pe, const ElementSet& e, const TripleProduct& pd,
                              const ElementSet& d, const TripleProduct& out) {
  ElementSet s;
  e.for_each([&](Element x) {
    d.for_each([&](Element y) {
      if (pe.second(x) == pd.first(y) && pe.third(x) == pd.third(y))
        s.insert(out.triple(pe.first(x), pd.second(y), pe.third(x)));
    });
  });
  return s;
}

}  // namespace

TEST_CASE("star product of full and identity subgroups") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto pe = triple_product(c3, c2, c2), pd = triple_product(c2, c3, c2), out = triple_product(c3, c3, c2);
  CHECK(star_triple(pe, pe.group().all(), pd, pd.group().all(), out) == out.group().all());

  auto pid = triple_product(c2, c2, c2);
  auto id = dress_identity_subgroup(pid);
  CHECK(id.size() == 4);
  for (const auto& s : lattice(pd.group()).subgroups) CHECK(star_triple(pid, id, pd, s, pd) == s);
  auto left = triple_product(c3, c2, c2);
  for (const auto& s : lattice(left.group()).subgroups) CHECK(star_triple(left, s, pid, id, left) == s);
}

TEST_CASE("star product agrees with its definition") {
  auto c2 = cyclic_group(2), v4 = make_group(GroupKind::Klein4);
  auto pe = triple_product(c2, v4, c2), pd = triple_product(v4, c2, c2), out = triple_product(c2, c2, c2);
  const auto& le = lattice(pe.group());
  const auto& ld = lattice(pd.group());
  for (int i = 0; i < le.class_count(); ++i)
    for (int j = 0; j < ld.class_count(); ++j) {
      const auto& e = le.class_rep(i);
      const auto& d = ld.class_rep(j);
      CHECK(star_triple(pe, e, pd, d, out) == star_by_definition(pe, e, pd, d, out));
    }
}

TEST_CASE("star product rejects mismatched factors") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto pe = triple_product(c2, c3, c2), pd = triple_product(c2, c2, c2);
  CHECK_THROWS_MATCHES(star_triple(pe, pe.group().all(), pd, pd.group().all(), pd), Error,
                       code_is(ErrorCode::FactorMismatch));
  auto pc = triple_product(c3, c2, c3);
  CHECK_THROWS_MATCHES(star_triple(pd, pd.group().all(), pc, pc.group().all(), pd), Error,
                       code_is(ErrorCode::FactorMismatch));
  CHECK_THROWS_MATCHES(dress_compose(DressElement::of_subgroup(pe, pe.group().all()),
                                     DressElement::of_subgroup(pd, pd.group().all())),
                       Error, code_is(ErrorCode::FactorMismatch));
}

TEST_CASE("projections and kernels of a star product") {
  auto c2 = cyclic_group(2);
  auto v4 = make_group(GroupKind::Klein4);
  auto pe = triple_product(c2, v4, c2), pd = triple_product(v4, c2, c2);
  for (const auto& e : lattice(pe.group()).subgroups)
    for (const auto& d : lattice(pd.group()).subgroups) {
      auto te = TripleSubgroup::of(pe, e), td = TripleSubgroup::of(pd, d);
      auto s = star_triple(te, td);
      CHECK(s.p13.is_subset_of(te.p13));
      CHECK(s.p23.is_subset_of(td.p23));
      CHECK(s.p3.is_subset_of(te.p3 & td.p3));
      CHECK(te.k1.is_subset_of(s.k1));
      CHECK(td.k2.is_subset_of(s.k2));
    }
}

TEST_CASE("3-set Mackey formula against the orbit oracle") {
  auto c1 = cyclic_group(1), c2 = cyclic_group(2);
  auto v4 = make_group(GroupKind::Klein4), s3 = make_group(GroupKind::Symmetric3);
  struct Case {
    FiniteGroup g, l, k, c;
  };
  for (auto& [g, l, k, c] : {Case{c1, v4, c2, c2}, Case{c2, c2, c2, c2}, Case{c2, s3, c1, c2}, Case{c1, c2, s3, c2}}) {
    auto pe = triple_product(g, l, c), pd = triple_product(l, k, c);
    for (const auto& x : dress_transitive_classes(pe))
      for (const auto& y : dress_transitive_classes(pd)) CHECK(dress_compose(x, y) == dress_oracle(x, y));
  }
}

TEST_CASE("free sets compose to |L||C| copies of the free set") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3), v4 = make_group(GroupKind::Klein4);
  for (auto l : {c2, c3, v4})
    for (auto c : {c2, c3}) {
      auto pe = triple_product(c2, l, c), pd = triple_product(l, c3, c);
      auto x = DressElement::of_subgroup(pe, ElementSet::singleton(0));
      auto y = DressElement::of_subgroup(pd, ElementSet::singleton(0));
      auto want = DressElement::of_subgroup(triple_product(c2, c3, c), ElementSet::singleton(0), l.order() * c.order());
      CHECK(dress_compose(x, y) == want);
      CHECK(dress_oracle(x, y) == want);
      CHECK(static_cast<int>(mackey_triple_terms(pe, ElementSet::singleton(0), pd, ElementSet::singleton(0)).size()) ==
            l.order() * c.order());
    }
}

TEST_CASE("Dress identity") {
  auto c1 = cyclic_group(1), c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto id = dress_identity(c2, c2);
  for (auto other : {c1, c2, c3}) {
    for (const auto& x : dress_transitive_classes(triple_product(c2, other, c2))) CHECK(dress_compose(id, x) == x);
    for (const auto& x : dress_transitive_classes(triple_product(other, c2, c2))) CHECK(dress_compose(x, id) == x);
  }
  CHECK(dress_compose(id, id) == id);
}

TEST_CASE("Dress composition is associative") {
  auto c1 = cyclic_group(1), c2 = cyclic_group(2);
  auto xs = dress_transitive_classes(triple_product(c2, c1, c2));
  auto ys = dress_transitive_classes(triple_product(c1, c2, c2));
  auto zs = dress_transitive_classes(triple_product(c2, c2, c2));
  for (const auto& x : xs)
    for (const auto& y : ys)
      for (std::size_t k = 0; k < zs.size(); k += 3)
        CHECK(dress_compose(dress_compose(x, y), zs[k]) == dress_compose(x, dress_compose(y, zs[k])));
}

TEST_CASE("conjugate triples") {
  auto s3 = make_group(GroupKind::Symmetric3), c2 = cyclic_group(2);
  auto prod = triple_product(s3, c2, c2);
  const auto& lat = lattice(prod.group());
  for (int c = 0; c < lat.class_count(); ++c) {
    const auto& rep = lat.class_rep(c);
    for (int x = 0; x < prod.order(); x += 5) {
      auto conj = conjugate_triple(prod, rep, static_cast<Element>(x));
      CHECK(are_conjugate_triples(prod, rep, conj));
      CHECK(lat.class_id(conj) == c);
    }
  }
}

TEST_CASE("D_{theta,zeta}") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
  for (auto g : {c2, c3, c4})
    for (auto c : {c2, c3}) {
      auto d = d_theta_zeta(g, c, GroupHom::identity(g), trivial_hom(c, g));
      CHECK(d.order() == g.order() * c.order());
      CHECK(has_full_projections(d));
      CHECK(d.p3.size() == c.order());
    }
  // a nontrivial zeta into the center still gives full projections
  auto zeta = GroupHom(c2, c4, {0, 2});
  auto d = d_theta_zeta(c4, c2, GroupHom::identity(c4), zeta);
  CHECK(has_full_projections(d));
  CHECK(d.k13.size() == c2.order());  // the graph of zeta

  CHECK_THROWS_MATCHES(d_theta_zeta(c2, c2, trivial_hom(c2, c2), trivial_hom(c2, c2)), Error,
                       code_is(ErrorCode::NotAutomorphism));
  auto s3 = make_group(GroupKind::Symmetric3);
  auto t = element_of_order(s3, 2);
  CHECK_THROWS_MATCHES(d_theta_zeta(s3, c2, GroupHom::identity(s3), GroupHom(c2, s3, {0, t})), Error,
                       code_is(ErrorCode::NotCentral));
}

TEST_CASE("admissible kernels") {
  auto c2 = cyclic_group(2);
  auto d = d_theta_zeta(c2, c2, GroupHom::identity(c2), trivial_hom(c2, c2));
  // D = {(g, g, c)}: p3-injective subgroups are 1, <(1,1,c)>, <(g,g,c)>
  CHECK(p3_injective_subgroups(d).size() == 3);
  CHECK(admissible_kernel_check(d, 1).empty());
  CHECK(admissible_kernel_check(d, 2).size() == 2);
  CHECK(admissible_kernel_check(d, 4).size() == 3);

  auto s3 = make_group(GroupKind::Symmetric3);
  auto ds = d_theta_zeta(s3, c2, GroupHom::identity(s3), trivial_hom(c2, s3));
  for (auto& n : admissible_kernel_check(ds, 12)) CHECK(normal_in(ds.prod.group(), n, ds.d));

  auto prod = triple_product(c2, c2, c2);
  auto small = TripleSubgroup::of(prod, ElementSet::singleton(0));
  CHECK_THROWS_MATCHES(admissible_kernel_check(small, 4), Error, code_is(ErrorCode::PreconditionViolated));
}

TEST_CASE("star decompositions found by the search are genuine") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto prod = triple_product(c3, c2, c2);
  for (const auto& s : {ElementSet::singleton(0), prod.group().all()}) {
    auto d = TripleSubgroup::of(prod, s);
    for (auto mode : {SearchMode::Pruned, SearchMode::Exhaustive}) {
      auto w = is_star_decomposable(d, 2, mode);
      REQUIRE(w.has_value());
      CHECK(w->k.order() < c3.order());
      CHECK(star_triple(w->a, w->b).d == s);
    }
  }
  // the search stops below |G|
  auto dz = d_theta_zeta(c2, c2, GroupHom::identity(c2), trivial_hom(c2, c2));
  CHECK_FALSE(is_star_decomposable(dz, 1, SearchMode::Exhaustive).has_value());
  CHECK_FALSE(is_star_decomposable(dz, 1, SearchMode::Pruned).has_value());
  auto dz3 = d_theta_zeta(c3, c2, GroupHom::identity(c3), trivial_hom(c2, c3));
  CHECK_THROWS_MATCHES(is_star_decomposable(dz3, 2, SearchMode::Exhaustive, 1), Error, code_is(ErrorCode::SearchBound));
}

TEST_CASE("factorization through the first projection") {
  auto c2 = cyclic_group(2), c4 = cyclic_group(4);
  auto prod = triple_product(c4, c2, c2);
  for (const auto& s : lattice(prod.group()).subgroups) {
    auto d = TripleSubgroup::of(prod, s);
    if (d.p1.size() != c4.order()) continue;
    auto f = factor_through_first(d);
    CHECK(f.d1.group.order() * d.k1.size() == c4.order());
    CHECK(star_triple(f.u, f.v).d == s);
  }
  auto d = TripleSubgroup::of(prod, ElementSet::singleton(0));
  CHECK_THROWS_MATCHES(factor_through_first(d), Error, code_is(ErrorCode::PreconditionViolated));
}

TEST_CASE("no bridge between C4 and V4") {
  auto c4 = cyclic_group(4), v4 = make_group(GroupKind::Klein4);
  for (auto c : {cyclic_group(2), cyclic_group(3), cyclic_group(5)}) {
    CHECK(no_bridge_check(c4, v4, c).bridges == 0);
    CHECK(find_bridges(c4, v4, c).empty());
  }
  CHECK_THROWS_MATCHES(no_bridge_check(c4, v4, cyclic_group(4)), Error, code_is(ErrorCode::PreconditionViolated));
  CHECK_THROWS_MATCHES(no_bridge_check(c4, c4, cyclic_group(2)), Error, code_is(ErrorCode::PreconditionViolated));
  CHECK_THROWS_MATCHES(no_bridge_check(c4, cyclic_group(2), cyclic_group(2)), Error,
                       code_is(ErrorCode::PreconditionViolated));
  // isomorphic groups are bridged by diagonals
  CHECK_FALSE(find_bridges(c4, c4, cyclic_group(2)).empty());
}

TEST_CASE("Q8 / D8 / C4 example") {
  auto r = counterexample_check();
  CHECK(r.t_order == 16);
  CHECK(r.kernel_order == 2);
  CHECK(r.kernel_is_alpha2beta2);
  CHECK(r.d_order == 16);
  CHECK(r.projections_full);
  CHECK(r.kernels_trivial);
  CHECK(r.generator_elements == 4);
  CHECK(r.normal_order4_candidates == 0);
  CHECK(r.admissible_at_7 == 0);
  CHECK(r.factors_through_first);
  CHECK_FALSE(r.decomposable);
  CHECK(r.transcript["verdict"] == "NOT DECOMPOSABLE");
  CHECK(r.transcript["D_order"] == 16);

  // D rebuilt from the transcript is a subgroup with the stated projections
  auto q8 = make_group(GroupKind::Quaternion8), d8 = make_group(GroupKind::Dihedral, 8), c4 = cyclic_group(4);
  auto prod = triple_product(q8, d8, c4);
  ElementSet d;
  for (const auto& row : r.transcript["T"]) d.insert(prod.triple(row["tau"], row["t"][0], row["t"][1]));
  auto t = TripleSubgroup::of(prod, d);
  CHECK(t.order() == 16);
  CHECK(t.p1.size() == 8);
  CHECK(t.p2.size() == 8);
  CHECK(t.k1.size() == 1);
  CHECK(t.k2.size() == 1);
  CHECK(admissible_kernel_check(t, 7).empty());
}
