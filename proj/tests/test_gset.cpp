#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/error.hpp"
#include "omega/gset.hpp"
#include "omega/scat.hpp"

using namespace omega;

namespace {

std::vector<std::size_t> counts(const GlobularData& g) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= g.trunc_dim(); ++n) out.push_back(g.count(n));
  return out;
}

}  // namespace

TEST_CASE("globes have the expected shape") {
  CHECK(counts(globe(0)) == std::vector<std::size_t>{1});
  CHECK(counts(globe(2)) == std::vector<std::size_t>{2, 2, 1});
  CHECK(counts(boundary_globe(3)) == std::vector<std::size_t>{2, 2, 2});
  CHECK(boundary_globe(0).total_cells() == 0);
  for (int n = 0; n <= 6; ++n) {
    CHECK(validate_globular(globe(n)).ok());
    CHECK(validate_globular(boundary_globe(n)).ok());
  }
}

TEST_CASE("a broken globular identity is reported once, naming the cell") {
  GlobularData g(2);
  int const a = g.add_cell(0, "a");
  int const b = g.add_cell(0, "b");
  int const f = g.add_cell(1, "f", a, b);
  int const h = g.add_cell(1, "h", a, a);
  g.add_cell(2, "p", f, h);
  auto r = validate_globular(g);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].cells == std::vector<std::string>{"p"});
}

TEST_CASE("missing boundaries are violations") {
  GlobularData g(1);
  g.add_cell(0, "a");
  g.add_cell(1, "f");
  CHECK_FALSE(validate_globular(g).ok());
}

TEST_CASE("count_maps on small shapes") {
  auto const c12 = cosep(1, 2).underlying();
  CHECK(count_maps(globe(1), c12) == 2);
  CHECK(count_maps(boundary_globe(1), globe(0)) == 1);
  CHECK(count_maps(disjoint_union(globe(1), globe(1)), c12) == 4);
  CHECK(count_maps(boundary_globe(0), globe(3)) == 1);
  CHECK(count_maps(globe(1), boundary_globe(1)) == 0);
  // maps out of the n-globe pick out n-cells
  auto const target = walking_iso().underlying();
  CHECK(count_maps(globe(1), target) == target.count(1));
  CHECK(count_maps(globe(0), target) == target.count(0));
}

TEST_CASE("count_maps agrees with a product formula on discrete sources") {
  GlobularData points(0);
  for (int i = 0; i < 5; ++i) points.add_cell(0, "p" + std::to_string(i));
  CHECK(count_maps(points, globe(2)) == 32);  // 2^5
}

TEST_CASE("count_maps respects its budget") {
  auto const big = disjoint_union(disjoint_union(globe(2), globe(2)),
                                  disjoint_union(globe(2), globe(2)));
  CHECK_THROWS_AS(count_maps(big, big, CountOptions{10}), BudgetExceeded);
}

TEST_CASE("disjoint union keeps boundaries apart") {
  auto const u = disjoint_union(globe(1), globe(2));
  CHECK(validate_globular(u).ok());
  CHECK(counts(u) == std::vector<std::size_t>{4, 3, 1});
}
