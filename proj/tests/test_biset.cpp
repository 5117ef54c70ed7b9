#include <catch_amalgamated.hpp>

#include "bisetkit/biset.hpp"
#include "bisetkit/catalog.hpp"

using namespace bisetkit;

namespace {

std::vector<FiniteGroup> small_set() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), make_group(GroupKind::Klein4)};
}

BurnsideElement point() {
  auto c1 = cyclic_group(1);
  return BurnsideElement::of_subgroup(c1, c1, ElementSet::singleton(0));
}

bool nonnegative_integral(const BurnsideElement& x) {
  for (const auto& [c, q] : x.terms())
    if (q < 0 || !is_integer(q)) return false;
  return true;
}

}  // namespace

TEST_CASE("identity biset is a two-sided identity") {
  for (auto g : {cyclic_group(2), cyclic_group(4), make_group(GroupKind::Symmetric3)}) {
    auto id = identity_biset(g);
    CHECK(compose_bisets(id, id) == id);
    for (auto h : {cyclic_group(1), cyclic_group(2), g}) {
      for (const auto& x : transitive_classes(g, h)) CHECK(compose_bisets(id, BurnsideElement(x)) == BurnsideElement(x));
      for (const auto& x : transitive_classes(h, g)) CHECK(compose_bisets(BurnsideElement(x), id) == BurnsideElement(x));
    }
  }
  auto c1 = cyclic_group(1);
  CHECK(identity_biset(c1) == point());
}

TEST_CASE("induction and restriction through the trivial group") {
  auto c2 = cyclic_group(2), c1 = cyclic_group(1);
  auto triv = subgroup_as_group(c2, ElementSet::singleton(0));
  BurnsideElement ind(induction(c2, triv));
  BurnsideElement res(restriction(c2, triv));
  REQUIRE(ind.left() == c2);
  REQUIRE(ind.right() == c1);
  CHECK(compose_bisets(res, ind) == point().scaled(2));
  CHECK(compose_oracle(res, ind) == point().scaled(2));
  auto free = BurnsideElement::of_subgroup(c2, c2, ElementSet::singleton(0));
  CHECK(compose_bisets(ind, res) == free);
  CHECK(compose_oracle(ind, res) == free);
  CHECK(recompose(std::vector<BurnsideElement>{ind, res}) == free);
}

TEST_CASE("free bisets compose to multiples of the free biset") {
  for (auto h : small_set())
    for (auto g : small_set())
      for (auto k : small_set()) {
        auto x = BurnsideElement::of_subgroup(h, g, ElementSet::singleton(0));
        auto y = BurnsideElement::of_subgroup(g, k, ElementSet::singleton(0));
        auto expect = BurnsideElement::of_subgroup(h, k, ElementSet::singleton(0), g.order());
        CHECK(compose_oracle(x, y) == expect);
        CHECK(compose_bisets(x, y) == expect);
      }
}

TEST_CASE("Mackey formula matches the orbit oracle on a small set") {
  auto groups = small_set();
  groups.push_back(make_group(GroupKind::Symmetric3));
  for (auto h : groups)
    for (auto g : groups)
      for (auto k : groups) {
        if (h.order() * g.order() * k.order() > 72) continue;
        for (const auto& x : transitive_classes(h, g))
          for (const auto& y : transitive_classes(g, k)) {
            auto a = compose_transitive(x, y);
            CHECK(a == compose_oracle(x, y));
            CHECK(nonnegative_integral(a));
          }
      }
}

TEST_CASE("composition is associative") {
  auto groups = std::vector<FiniteGroup>{cyclic_group(1), cyclic_group(2), cyclic_group(3)};
  for (auto h : groups)
    for (auto g : groups)
      for (auto k : groups)
        for (auto l : groups) {
          auto xs = transitive_classes(h, g), ys = transitive_classes(g, k), zs = transitive_classes(k, l);
          for (const auto& x : xs)
            for (const auto& y : ys)
              for (const auto& z : zs) {
                BurnsideElement a(x), b(y), c(z);
                CHECK(compose_bisets(compose_bisets(a, b), c) == compose_bisets(a, compose_bisets(b, c)));
              }
        }
}

TEST_CASE("middle mismatch is rejected") {
  auto x = identity_biset(cyclic_group(2));
  auto y = identity_biset(cyclic_group(3));
  try {
    compose_bisets(x, y);
    FAIL("mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MiddleMismatch);
  }
  CHECK_THROWS_AS(recompose(std::vector<BurnsideElement>{}), Error);
  try {
    recompose(std::vector<BurnsideElement>{x, y});
    FAIL("mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InterfaceMismatch);
  }
  CHECK(recompose(std::vector<BurnsideElement>{x}) == x);
}

TEST_CASE("Goursat data") {
  auto g = make_group(GroupKind::Symmetric3);
  auto p = direct_product(g, g);
  auto gd = goursat_data(g, g, diagonal(p));
  CHECK(gd.d == g.all());
  CHECK(gd.b == g.all());
  CHECK(gd.c.size() == 1);
  CHECK(gd.a.size() == 1);
  CHECK(gd.f.images() == GroupHom::identity(gd.f.domain()).images());

  auto c1 = cyclic_group(1);
  auto q = direct_product(c1, g);
  auto gd2 = goursat_data(c1, g, q.group.all());
  CHECK(gd2.d.size() == 1);
  CHECK(gd2.b == g.all());
  CHECK(gd2.a == g.all());

  auto c4 = cyclic_group(4);
  auto p4 = direct_product(c4, c4);
  GroupHom inversion(c4, c4, {0, 3, 2, 1});
  auto gd3 = goursat_data(c4, c4, twisted_diagonal(p4, inversion));
  // f: B/A -> D/C with trivial kernels is (a, sigma(a)) read backwards: sigma(a) -> a
  for (int a = 0; a < 4; ++a) CHECK(gd3.f(inversion(static_cast<Element>(a))) == a);
  CHECK(gd3.f.images() == std::vector<Element>{0, 3, 2, 1});

  for (auto& l : lattice(p4.group).subgroups) CHECK(reconstruct(goursat_data(c4, c4, l)) == l);
}

TEST_CASE("Bouc decomposition round trip for small groups") {
  auto groups = small_set();
  groups.push_back(cyclic_group(4));
  groups.push_back(make_group(GroupKind::Symmetric3));
  for (auto h : groups)
    for (auto g : groups)
      for (const auto& x : transitive_classes(h, g)) {
        auto w = bouc_decompose(x);
        REQUIRE(w.factors.size() == 5);
        CHECK(reconstruct(w.data) == x.stabilizer());
        CHECK(recompose(w.factors) == BurnsideElement(x));
      }
}

TEST_CASE("Bouc decomposition of special classes") {
  auto g = cyclic_group(4);
  auto w = bouc_decompose(identity_biset(g).support().front());
  CHECK(w.data.d == g.all());
  CHECK(w.data.c.size() == 1);
  for (auto& f : w.factors) CHECK(f.left.order() == 4);

  auto c2 = cyclic_group(2);
  auto p = direct_product(g, c2);
  ElementSet l;
  for (int a = 0; a < 4; ++a) l.insert(p.pair(static_cast<Element>(a), 0));
  auto x = BisetClass::of(g, c2, l);
  auto wx = bouc_decompose(x);
  CHECK(wx.data.d_mod_c.group.order() == 1);
  CHECK(wx.data.b_mod_a.group.order() == 1);
  CHECK(recompose(wx.factors) == BurnsideElement(x));
}

TEST_CASE("elementary bisets") {
  auto s3 = make_group(GroupKind::Symmetric3);
  auto t = cyclic_subgroup(s3, 1);
  auto ind = elementary_biset(ElementaryKind::Ind, {s3, t, {}});
  auto res = elementary_biset(ElementaryKind::Res, {s3, t, {}});
  auto r = compose_bisets(BurnsideElement(res), BurnsideElement(ind));
  CHECK(r == compose_oracle(BurnsideElement(res), BurnsideElement(ind)));
  // Res_B^G Ind_B^G has one term per double coset B\G/B.
  Rational total = 0;
  for (auto& [c, q] : r.terms()) total += q;
  CHECK(total == 2);

  auto c3 = cyclic_subgroup(s3, s3.element_order(2) == 3 ? 2 : 3);
  REQUIRE(c3.size() == 3);
  auto inf = elementary_biset(ElementaryKind::Inf, {s3, c3, {}});
  auto def = elementary_biset(ElementaryKind::Def, {s3, c3, {}});
  auto dd = compose_bisets(BurnsideElement(def), BurnsideElement(inf));
  CHECK(dd == identity_biset(def.left));
  CHECK(dd == compose_oracle(BurnsideElement(def), BurnsideElement(inf)));

  auto c4 = cyclic_group(4);
  CHECK(BurnsideElement(elementary_biset(ElementaryKind::Iso, {c4, {}, GroupHom::identity(c4)})) == identity_biset(c4));
  try {
    elementary_biset(ElementaryKind::Inf, {s3, t, {}});
    FAIL("non-normal kernel accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }
}

TEST_CASE("external products") {
  auto c2 = cyclic_group(2), c1 = cyclic_group(1);
  auto x = BurnsideElement::of_subgroup(c2, c1, ElementSet::singleton(0));
  auto y = BurnsideElement::of_subgroup(c1, c2, ElementSet::singleton(0));
  auto xy = external_product(x, y);
  CHECK(xy.left().order() == 2);
  CHECK(xy.right().order() == 2);
  REQUIRE(xy.terms().size() == 1);
  CHECK(xy.lattice_ref().class_rep(xy.terms().begin()->first).size() == 1);

  auto s = identity_biset(c2);
  auto e = external_product(s, point());
  CHECK(e.lattice_ref().class_rep(e.terms().begin()->first) == s.lattice_ref().class_rep(s.terms().begin()->first));
  CHECK(external_product(x.scaled(2), y.scaled(3)) == external_product(x, y).scaled(6));

  // (x * y) o (x' * y') = (x o x') * (y o y')
  auto groups = std::vector<FiniteGroup>{c1, c2};
  for (auto a : groups)
    for (auto b : groups)
      for (auto c : groups)
        for (const auto& u : transitive_classes(a, b))
          for (const auto& v : transitive_classes(b, c))
            for (const auto& u2 : transitive_classes(c2, c1))
              for (const auto& v2 : transitive_classes(c1, c2)) {
                BurnsideElement U(u), V(v), U2(u2), V2(v2);
                CHECK(compose_bisets(external_product(U, U2), external_product(V, V2)) ==
                      external_product(compose_bisets(U, V), compose_bisets(U2, V2)));
              }
}

TEST_CASE("hat constructions and opposites") {
  auto g = cyclic_group(3);
  auto id = identity_biset(g);
  auto h = hat_right(id);
  CHECK(h.left().order() == 9);
  CHECK(h.right().order() == 1);
  REQUIRE(h.terms().size() == 1);
  CHECK(h.lattice_ref().class_rep(h.terms().begin()->first) == diagonal(direct_product(g, g)));
  auto free = BurnsideElement::of_subgroup(g, g, ElementSet::singleton(0));
  CHECK(hat_right(free).lattice_ref().class_rep(hat_right(free).terms().begin()->first).size() == 1);
  CHECK(hat_left(id).left().order() == 1);

  // Iso(phi) hat gives the graph of phi
  GroupHom inv(g, g, {0, 2, 1});
  BurnsideElement iso(isogation(inv));
  auto hi = hat_right(iso);
  CHECK(hi.lattice_ref().class_rep(hi.terms().begin()->first) == twisted_diagonal(direct_product(g, g), inv));

  auto s3 = make_group(GroupKind::Symmetric3);
  for (const auto& x : transitive_classes(s3, cyclic_group(2))) {
    BurnsideElement e(x);
    CHECK(opposite(opposite(e)) == e);
  }
}
