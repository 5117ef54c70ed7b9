#include <catch_amalgamated.hpp>

#include "bisetkit/catalog.hpp"
#include "oracles.hpp"

using namespace bisetkit;

TEST_CASE("catalog counts per order") {
  const std::vector<int> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  for (int n = 1; n <= 15; ++n) {
    INFO("order " << n);
    auto gs = groups_of_order(n);
    CHECK(static_cast<int>(gs.size()) == expected[n - 1]);
    for (auto& g : gs) CHECK(g.order() == n);
  }
  auto one = groups_of_order(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front().label() == "C1");
  auto seven = groups_of_order(7);
  REQUIRE(seven.size() == 1);
  CHECK(is_isomorphic(seven.front(), cyclic_group(7)));
}

TEST_CASE("order 8 entries") {
  std::vector<std::string> names;
  for (auto& g : groups_of_order(8)) names.push_back(g.label());
  CHECK(names == std::vector<std::string>{"C8", "C4xC2", "C2^3", "D8", "Q8"});
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
  for (int n = 1; n <= 15; ++n) {
    auto gs = groups_of_order(n);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        INFO(gs[i].label() << " vs " << gs[j].label());
        CHECK_FALSE(is_isomorphic(gs[i], gs[j]));
        if (n <= 8) CHECK_FALSE(oracle::isomorphic_by_bijections(gs[i], gs[j]));
      }
  }
}

TEST_CASE("catalog bounds") {
  try {
    groups_of_order(16);
    FAIL("order 16 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfCatalog);
  }
  CHECK(groups_smaller_than(4).size() == 3);
}

TEST_CASE("group names") {
  CHECK(group_by_name("C6").order() == 6);
  CHECK(is_isomorphic(group_by_name("V4"), make_group(GroupKind::Klein4)));
  CHECK(group_by_name("D10").order() == 10);
  CHECK(group_by_name("D12") == make_group(GroupKind::Dihedral, 12));
  CHECK(group_by_name("A4").order() == 12);
  CHECK_FALSE(group_by_name("A4").is_abelian());
  CHECK(group_by_name("Dic12").order() == 12);
  CHECK(group_by_name("prod(C2,prod(C2,C3))").order() == 12);
  CHECK(is_isomorphic(group_by_name("prod(C2, C3)"), cyclic_group(6)));
  CHECK(group_by_name("C4xC2").order() == 8);
  try {
    group_by_name("Foo");
    FAIL("unknown name accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownGroup);
  }
}

TEST_CASE("catalog override entries") {
  // Q8 again under another name is rejected as a duplicate.
  auto q8 = make_group(GroupKind::Quaternion8);
  nlohmann::json doc;
  doc["order"] = 8;
  doc["name"] = "Q8copy";
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) rows[a][b] = q8.mul(static_cast<Element>(a), static_cast<Element>(b));
  doc["table"] = rows;
  CHECK_THROWS_AS(load_catalog_overrides(doc), Error);
  CHECK(groups_of_order(8).size() == 5);
  doc["table"] = std::vector<std::vector<int>>{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(load_catalog_overrides(doc), Error);
}
