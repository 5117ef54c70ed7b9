#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "bisetkit/bisetkit.hpp"

using namespace bisetkit;

namespace {

// Brute-force |Out(G)|: all bijective table-preserving maps fixing 1, over the
// distinct conjugation maps.
int out_order_oracle(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int auts = 0;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = perm[g.mul(static_cast<Element>(a), static_cast<Element>(b))] == g.mul(perm[a], perm[b]);
    auts += ok;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  std::set<std::vector<int>> inner;
  for (int x = 0; x < n; ++x) {
    std::vector<int> m;
    for (int y = 0; y < n; ++y)
      m.push_back(g.mul(g.mul(static_cast<Element>(x), static_cast<Element>(y)), g.inv(static_cast<Element>(x))));
    inner.insert(m);
  }
  return auts / static_cast<int>(inner.size());
}

// Primitive Dirichlet characters mod m, multiplicatively: p - 2 at p, and
// p^k - 2p^{k-1} + p^{k-2} at p^k, k >= 2.
long primitive_count_oracle(long m) {
  long out = 1;
  for (long p = 2; m > 1; ++p) {
    if (m % p) continue;
    long pk = 1;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      pk *= p;
      ++k;
    }
    out *= k == 1 ? p - 2 : pk - 2 * (pk / p) + pk / (p * p);
  }
  return out;
}

template <class T>
std::vector<T> unit(int n, int i) {
  return detail::unit_vector<T>(n, i);
}

template <class B>
void check_identity_law(const B& be, const FiniteGroup& h, const FiniteGroup& k) {
  auto hk = direct_product(h, k).group;
  const int n = be.dim(hk);
  for (int i = 0; i < n; ++i) {
    auto v = unit<typename B::Scalar>(n, i);
    CHECK(be.compose(h, h, k, be.identity(h), v) == v);
    CHECK(be.compose(h, k, k, v, be.identity(k)) == v);
  }
}

template <class B>
void check_associativity(const B& be, const FiniteGroup& a, const FiniteGroup& b, const FiniteGroup& c,
                         const FiniteGroup& d) {
  const int nab = be.dim(direct_product(a, b).group);
  const int nbc = be.dim(direct_product(b, c).group);
  const int ncd = be.dim(direct_product(c, d).group);
  using T = typename B::Scalar;
  for (int i = 0; i < nab; ++i)
    for (int j = 0; j < nbc; ++j)
      for (int k = 0; k < ncd; k += 2) {
        auto x = unit<T>(nab, i), y = unit<T>(nbc, j), z = unit<T>(ncd, k);
        CHECK(be.compose(a, c, d, be.compose(a, b, c, x, y), z) == be.compose(a, b, d, x, be.compose(b, c, d, y, z)));
      }
}

}  // namespace

TEST_CASE("out order oracle agrees with the automorphism routine") {
  for (auto g : {cyclic_group(1), cyclic_group(5), make_group(GroupKind::Symmetric3), make_group(GroupKind::Klein4)})
    CHECK(out_order_oracle(g) == automorphisms(g).out_order);
}

TEST_CASE("RB quotient matches Out(H)") {
  for (auto h : {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), make_group(GroupKind::Klein4),
                 cyclic_group(5), make_group(GroupKind::Symmetric3)}) {
    auto rep = check_out_iso(h);
    CHECK(rep.quotient_dim == out_order_oracle(h));
    CHECK(rep.basis_is_twisted_diagonals);
  }
  CHECK(ahat_dim(RBBackend{}, make_group(GroupKind::Klein4)) == 6);
  CHECK(ahat_dim(RBBackend{}, cyclic_group(1)) == 1);
  CHECK(ahat_dim(RBBackend{}, cyclic_group(2)) == 1);
}

TEST_CASE("kR_Q quotient counts primitive characters on cyclic groups") {
  for (int m = 1; m <= 7; ++m) CHECK(ahat_dim(RQBackend{}, cyclic_group(m)) == primitive_count_oracle(m));
  CHECK(ahat_dim(RQBackend{}, make_group(GroupKind::Symmetric3)) == 0);
  CHECK(ahat_dim(RQBackend{}, make_group(GroupKind::Klein4)) == 0);
}

TEST_CASE("CR_C quotient vanishes beyond the trivial group") {
  CHECK(ahat_dim(CRCBackend{}, cyclic_group(1)) == 1);
  for (auto h : {cyclic_group(2), cyclic_group(3), make_group(GroupKind::Klein4), make_group(GroupKind::Symmetric3)})
    CHECK(ahat_dim(CRCBackend{}, h) == 0);
}

TEST_CASE("RB_C quotient") {
  for (auto c : {cyclic_group(2), cyclic_group(3)}) {
    auto r = rbc_ideal_report(cyclic_group(1), c);
    CHECK(r.quotient_dim == lattice(c).class_count());
  }
  // the full span contains at least the classes the summand criterion finds
  auto c2 = cyclic_group(2);
  for (auto h : {cyclic_group(2), cyclic_group(3)}) {
    auto full = rbc_ideal_report(h, c2);
    REQUIRE(full.determined);
    RBCBackend be{c2};
    auto hh = direct_product(h, h).group;
    std::vector<char> reached(static_cast<std::size_t>(be.dim(hh)), 0);
    for (const auto& k : groups_smaller_than(h.order()))
      for (const auto& a : dress_transitive_classes(triple_product(h, k, c2)))
        for (const auto& b : dress_transitive_classes(triple_product(k, h, c2)))
          for (const auto& ab = dress_compose(a, b); const auto& [cls, q] : ab.terms())
            reached[static_cast<std::size_t>(cls)] = 1;
    int unreached = static_cast<int>(std::count(reached.begin(), reached.end(), 0));
    CHECK(full.quotient_dim >= unreached);
    CHECK(full.quotient_dim > 0);
  }
  auto big = rbc_ideal_report(cyclic_group(5), c2);
  CHECK_FALSE(big.determined);
  CHECK(!big.quotient_basis.empty());
}

TEST_CASE("the ideal is two-sided") {
  for (auto h : {cyclic_group(2), cyclic_group(3)}) {
    CHECK(ideal_is_two_sided(RBBackend{}, h, ideal_rows(RBBackend{}, h)));
    CHECK(ideal_is_two_sided(RQBackend{}, h, ideal_rows(RQBackend{}, h)));
  }
  auto s3 = make_group(GroupKind::Symmetric3);
  CHECK(ideal_is_two_sided(CRCBackend{}, cyclic_group(2), ideal_rows(CRCBackend{}, cyclic_group(2))));
  CHECK(ideal_is_two_sided(RQBackend{}, s3, ideal_rows(RQBackend{}, s3)));
  RBCBackend rbc{cyclic_group(2)};
  CHECK(ideal_is_two_sided(rbc, cyclic_group(2), ideal_rows(rbc, cyclic_group(2))));
}

TEST_CASE("backend identity law") {
  auto c1 = cyclic_group(1), c2 = cyclic_group(2), c3 = cyclic_group(3);
  check_identity_law(RBBackend{}, c2, c3);
  check_identity_law(RQBackend{}, c2, c3);
  check_identity_law(CRCBackend{}, c2, c3);
  check_identity_law(RBCBackend{c2}, c2, c1);
  check_identity_law(RBCBackend{c2}, c2, c2);
}

TEST_CASE("backend associativity") {
  auto c1 = cyclic_group(1), c2 = cyclic_group(2), c3 = cyclic_group(3);
  check_associativity(RBBackend{}, c2, c3, c2, c1);
  check_associativity(RQBackend{}, c2, c2, c3, c2);
  check_associativity(CRCBackend{}, c3, c2, c2, c1);
  check_associativity(RBCBackend{c2}, c2, c1, c2, c1);
}

TEST_CASE("backend composition is bilinear") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  RQBackend rq;
  const int n23 = rq.dim(direct_product(c2, c3).group), n32 = rq.dim(direct_product(c3, c2).group);
  std::vector<Rational> x(static_cast<std::size_t>(n23)), y(static_cast<std::size_t>(n32));
  for (int i = 0; i < n23; ++i) x[i] = make_rational(i + 1, 3);
  for (int i = 0; i < n32; ++i) y[i] = make_rational(2 - i, 5);
  std::vector<Rational> sum(static_cast<std::size_t>(rq.dim(direct_product(c2, c2).group)), Rational(0));
  for (int i = 0; i < n23; ++i) {
    auto part = rq.compose(c2, c3, c2, unit<Rational>(n23, i), y);
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += x[i] * part[j];
  }
  CHECK(rq.compose(c2, c3, c2, x, y) == sum);
}

TEST_CASE("x_n elements") {
  CHECK(units_mod(8) == std::vector<long>{1, 3, 5, 7});
  CHECK(xn_element(4, 2) == std::vector<Rational>{1, 1});
  CHECK(xn_element(8, 4) == std::vector<Rational>{1, 0, 1, 0});
  CHECK(xn_element(6, 3) == std::vector<Rational>{1, 0});
  CHECK(xn_element(5, 1) == std::vector<Rational>{1, 1, 1, 1});
  CHECK_THROWS_MATCHES(xn_element(6, 4), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::NotDivisor;
                       }));
  CHECK_THROWS_AS(xn_element(6, 6), Error);
}

TEST_CASE("unit characters are homomorphisms") {
  for (long m : {5L, 8L, 12L}) {
    auto u = unit_group(m);
    for (const auto& chi : unit_characters(m))
      for (int a = 0; a < u.order(); ++a)
        for (int b = 0; b < u.order(); ++b)
          CHECK(chi.at(u.mul(static_cast<Element>(a), static_cast<Element>(b))) ==
                chi.at(static_cast<Element>(a)) * chi.at(static_cast<Element>(b)));
  }
}

TEST_CASE("seed counts agree with the Dirichlet count") {
  CHECK(primitive_characters(1).size() == 1);
  CHECK(primitive_characters(2).empty());
  CHECK(primitive_characters(8).size() == 2);
  auto one = seeds_kRQ(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].key == "C1/chi0");
  for (long m = 1; m <= 40; ++m) {
    CHECK(static_cast<long>(primitive_characters(m).size()) == primitive_count_oracle(m));
    CHECK(seed_count_by_ideal(m) == primitive_count_oracle(m));
  }
  std::vector<long> frozen{1, 0, 1, 1, 3, 0, 5, 2, 4, 0, 9, 1};
  auto seeds = seeds_kRQ(12);
  for (long m = 1; m <= 12; ++m)
    CHECK(std::count_if(seeds.begin(), seeds.end(), [m](const Seed& s) { return s.m == m; }) == frozen[m - 1]);
  CHECK_THROWS_AS(seeds_kRQ(kMaxSeedModulus + 1), Error);
}

TEST_CASE("seeds are stable under isomorphisms of cyclic groups") {
  auto c6 = cyclic_group(6), c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto p = direct_product(c2, c3);
  std::vector<Element> im(6);
  for (int j = 0; j < 6; ++j) im[j] = p.group.pow(p.pair(1, 1), j);
  GroupHom phi(c6, p.group, im);
  for (int chi = 0; chi < static_cast<int>(unit_characters(6).size()); ++chi)
    CHECK(transport_preserves_character(6, chi, phi));
  auto c5 = cyclic_group(5);
  std::vector<Element> sq(5);
  for (int j = 0; j < 5; ++j) sq[j] = c5.pow(1, 2 * j);
  GroupHom square(c5, c5, sq);
  for (int chi = 0; chi < 4; ++chi) CHECK(transport_preserves_character(5, chi, square));
}

TEST_CASE("kernel of l_H") {
  for (long m : {1L, 2L, 3L, 4L, 5L, 6L, 9L}) {
    auto r = ell_kernel_report(m);
    CHECK(r.match);
    CHECK(r.quotient_dim == primitive_count_oracle(m));
    CHECK(r.units - r.ell_kernel_dim == primitive_count_oracle(m));
  }
}

TEST_CASE("products of irreducibles span CR_C(G x K)") {
  auto a = crc_product_span(cyclic_group(1), cyclic_group(1));
  CHECK(a.product_rank == 1);
  CHECK(a.match);
  auto b = crc_product_span(cyclic_group(2), cyclic_group(2));
  CHECK(b.target_dim == 4);
  CHECK(b.match);
  auto c = crc_product_span(make_group(GroupKind::Symmetric3), cyclic_group(2));
  CHECK(c.target_dim == 6);
  CHECK(c.match);
  CHECK_THROWS_AS(crc_product_span(cyclic_group(9), cyclic_group(8)), Error);
}
