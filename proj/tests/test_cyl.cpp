#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/corpus.hpp"
#include "omega/cyl.hpp"
#include "omega/error.hpp"

using namespace omega;

TEST_CASE("level-0 cylinders are the equivalence 1-cells") {
  auto const wi = walking_iso();
  auto const zero = enumerate_cylinders(wi, 0);
  CHECK(zero.size() == 4);
  auto const g = globe_cat(1, 1);
  auto const gz = enumerate_cylinders(g, 0);
  REQUIRE(gz.size() == 2);
  for (auto const& u : gz) CHECK(g.is_identity(u.core));
}

TEST_CASE("the terminal category has one cylinder per level") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= d; ++n) CHECK(enumerate_cylinders(terminal(d), n).size() == 1);
}

TEST_CASE("cylinder boundaries") {
  auto const wi = walking_iso();
  Equivalences const eq(wi);
  for (auto const& u : enumerate_cylinders(eq, 1)) {
    CHECK(is_cylinder(eq, u));
    auto [s, t] = cylinder_boundary(wi, u);
    CHECK(s.level == 0);
    CHECK(s.core == u.flats[0]);
    CHECK(t.core == u.sharps[0]);
    CHECK(is_cylinder(eq, s));
    CHECK(is_cylinder(eq, t));
    auto nat = natural_component(wi, u);
    CHECK(nat.core == u.core);
  }
  CHECK_THROWS_AS(cylinder_boundary(wi, enumerate_cylinders(eq, 0).front()),
                  InvalidInput);
}

TEST_CASE("bridges") {
  auto const wi = walking_iso();
  Equivalences const eq(wi);
  Cell const u = wi.cell(1, "u"), v = wi.cell(1, "v");
  auto const b = bridge(eq, u, v, u);
  CHECK(b.level == 1);
  CHECK(b.flats[0] == wi.identity(wi.cell(0, "x")));
  CHECK(b.sharps[0] == wi.identity(wi.cell(0, "y")));
  CHECK(is_cylinder(eq, b));
  Cell const ix = wi.identity(wi.cell(0, "x"));
  auto const trivial = bridge(eq, ix, ix, ix);
  CHECK(trivial.flats[0] == ix);
  CHECK(trivial.sharps[0] == ix);
  CHECK(wi.is_identity(trivial.core));
  CHECK_THROWS_AS(bridge(eq, u, u, u), InvalidInput);
  auto const g = globe_cat(1, 1);
  Equivalences const geq(g);
  Cell const c = g.cell(1, "c");
  CHECK_THROWS_AS(bridge(geq, c, c, c), InvalidInput);
}

TEST_CASE("bridges in a 2-category prescribe their boundary composites") {
  auto const x = suspend(walking_iso());
  Equivalences const eq(x);
  Cell const u = x.cell(2, "u"), v = x.cell(2, "v");
  auto const b = bridge(eq, u, v, u);
  REQUIRE(b.level == 2);
  CHECK(is_cylinder(eq, b));
  CHECK(b.flats[1] == x.compose(1, u, v));
  CHECK(b.sharps[1] == x.compose(1, v, u));
}

TEST_CASE("projections of the cylinder set") {
  auto const wi = walking_iso();
  auto const r = check_projections_trivfib(Equivalences(wi), 1);
  CHECK(r.verdict);
  CHECK(r.levels_checked == 1);
  auto const tight = check_projections_trivfib(Equivalences(flat_demo()), 2, 100);
  CHECK(tight.verdict);
  CHECK(tight.levels_checked < 2);
}

TEST_CASE("gamma is a globular set") {
  for (auto const& x : {walking_iso(), flat_demo(), cosep(1, 2), suspend(walking_iso())}) {
    Equivalences const eq(x);
    auto const g = gamma(eq, x.trunc_dim());
    CHECK(validate_globular(g.cells).ok());
    CHECK(g.cells.count(0) == enumerate_cylinders(eq, 0).size());
  }
}

TEST_CASE("property: both projections lift on a seeded corpus") {
  for (auto const& e : generate_corpus({21, 30})) {
    Equivalences const eq(*e.cat);
    auto const r = check_projections_trivfib(eq, e.cat->trunc_dim());
    CAPTURE(e.name);
    CHECK(r.verdict);
  }
}
