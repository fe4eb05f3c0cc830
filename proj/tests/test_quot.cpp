#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/corpus.hpp"
#include "omega/error.hpp"
#include "omega/quot.hpp"

using namespace omega;

TEST_CASE("tau1 of fixtures") {
  auto const q = tau1(walking_iso());
  CHECK(q.objects.size() == 2);
  CHECK(q.classes.size() == 4);
  for (std::size_t i = 0; i < q.classes.size(); ++i) CHECK(q.is_iso(static_cast<int>(i)));
  CHECK(validate_quotient(q).ok());

  auto const g = tau1(globe_cat(1, 1));
  CHECK(g.classes.size() == 3);
  CHECK(validate_quotient(g).ok());

  auto const t = tau1(terminal(2));
  CHECK(t.objects.size() == 1);
  CHECK(t.classes.size() == 1);
}

TEST_CASE("tau1 identifies parallel cells joined by an equivalence") {
  auto const f = flat_demo();
  auto const q = tau1(f);
  CHECK(q.class_of[f.cell(1, "v").index] == q.class_of[f.cell(1, "w").index]);
  CHECK(q.witness_log.ok());
}

TEST_CASE("isomorphisms in tau1") {
  auto const wi = walking_iso();
  CHECK(iso_in_quotient(wi, wi.cell(1, "u")));
  CHECK(iso_in_quotient(wi, wi.identity(wi.cell(0, "x"))));
  auto const g = globe_cat(1, 1);
  CHECK_FALSE(iso_in_quotient(g, g.cell(1, "c")));
  CHECK_THROWS_AS(iso_in_quotient(g, g.cell(0, "s0")), InvalidInput);
}

TEST_CASE("tau2 of fixtures") {
  auto const t = tau2(terminal(2));
  CHECK(t.objects.size() == 1);
  CHECK(t.homs.size() == 1);
  CHECK(t.homs.begin()->second.quotient.classes.size() == 1);
  CHECK(validate_two_category(terminal(2), t).ok());
  CHECK_THROWS_AS(tau2(walking_iso()), InvalidInput);

  auto const s = suspend(walking_iso());
  auto const ts = tau2(s);
  CHECK(validate_two_category(s, ts).ok());
  CHECK(ts.witness_log.ok());
  Equivalences const eq(s);
  for (Cell u : s.cells(1)) CHECK(equivalence_in_tau2(s, ts, u) == eq.contains(u));
}

TEST_CASE("property: quotient invertibility matches equivalences") {
  for (auto const& e : generate_corpus({17, 40})) {
    auto const& x = *e.cat;
    Equivalences const eq(x);
    auto const q = tau1(eq);
    CAPTURE(e.name);
    CHECK(validate_quotient(q).ok());
    CHECK(q.witness_log.ok());
    for (Cell u : x.cells(1)) CHECK(iso_in_quotient(q, u) == eq.contains(u));
  }
}
