#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/coind.hpp"
#include "omega/corpus.hpp"
#include "omega/error.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

oracle::Subset as_subset(const CellSet& s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

CellSet identities(const FiniteOmegaCat& x) {
  CellSet s = CellSet::empty(x);
  for (int n = 1; n <= x.trunc_dim(); ++n)
    for (Cell c : x.cells(n))
      if (x.is_identity(c)) s.insert(c);
  return s;
}

}  // namespace

TEST_CASE("greatest fixed point of trivial operators") {
  auto const x = walking_iso();
  CHECK(greatest_fixed_point(x, [](const CellSet& s) { return s; }) ==
        CellSet::full(x));
  CHECK(greatest_fixed_point(x, [&](const CellSet&) { return CellSet::empty(x); }) ==
        CellSet::empty(x));
}

TEST_CASE("a growing operator is rejected") {
  auto const x = walking_iso();
  int calls = 0;
  auto op = [&](const CellSet& s) {
    ++calls;
    return calls == 1 ? CellSet::empty(x) : CellSet::full(x);
  };
  (void)op;
  CHECK_THROWS_AS(greatest_fixed_point(x, op), NonMonotone);
}

TEST_CASE("one step of phi, psi, rinv") {
  auto const wi = walking_iso();
  auto const full = CellSet::full(wi);
  CHECK(phi(wi, full) == full);
  CHECK(phi(wi, CellSet::empty(wi)) == full);  // top witnesses are formal
  CHECK(rinv(wi, full) == full);
  auto const g = globe_cat(1, 1);
  CHECK(phi(g, CellSet::full(g)) == identities(g));
  CHECK(rinv(g, CellSet::full(g)) == identities(g));
  auto const g2 = globe_cat(2, 2);
  CHECK(psi(g2, CellSet::full(g2)) == identities(g2));
}

TEST_CASE("equivalences of fixtures") {
  CHECK(equivalences(walking_iso()).size() == 4);
  CHECK(equivalences(terminal(3)) == CellSet::full(terminal(3)));
  auto const g = globe_cat(2, 2);
  CHECK(equivalences(g) == identities(g));
  CHECK(equivalences(flat_demo()).size() == 20);
  CHECK(flat_equivalences(flat_demo()) == equivalences(flat_demo()));
}

TEST_CASE("similarity and inverses") {
  auto const wi = walking_iso();
  Cell const u = wi.cell(1, "u"), v = wi.cell(1, "v");
  CHECK(find_inverse(wi, u) == v);
  auto const g = globe_cat(1, 1);
  CHECK_FALSE(find_inverse(g, g.cell(1, "c")));
  Equivalences const eq(wi);
  CHECK(eq.similar(u, u));
  CHECK(eq.similar(wi.cell(0, "x"), wi.cell(0, "y")));
  CHECK_THROWS_AS(eq.similar(u, v), InvalidInput);
  // in flat_demo the right and left inverses are related by an equivalence
  auto const f = flat_demo();
  CHECK(similar(f, f.cell(1, "v"), f.cell(1, "w")));
}

TEST_CASE("fixed points match the subset-enumeration oracle") {
  std::vector<FiniteOmegaCat> all = {walking_iso(), globe_cat(1, 1), globe_cat(2, 2),
                                     terminal(2), cosep(1, 2), suspend(walking_iso()),
                                     codiscrete_top(walking_iso())};
  for (auto const& e : small_corpus(11, 6, 24))
    if (e.cat->total_cells() <= 12) all.push_back(*e.cat);
  for (auto const& x : all) {
    CAPTURE(x.total_cells());
    CHECK(as_subset(equivalences(x)) == oracle::nu_phi(x));
    CHECK(as_subset(flat_equivalences(x)) == oracle::nu_psi(x));
  }
}

TEST_CASE("property: equivalences are closed under inverses and contain identities") {
  for (auto const& e : generate_corpus({3, 40})) {
    auto const& x = *e.cat;
    auto const s = equivalences(x);
    CHECK(identities(x).subset_of(s));
    CHECK(rinv(x, s).subset_of(s));
    CHECK(phi(x, s) == s);  // a fixed point, not just post-fixed
    for (Cell u : s.members()) {
      auto inv = find_inverse(x, u);
      REQUIRE(inv);
      CHECK(s.contains(*inv));
    }
  }
}
