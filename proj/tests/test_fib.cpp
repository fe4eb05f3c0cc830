#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "omega/corpus.hpp"
#include "omega/fib.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

using Cat = std::shared_ptr<const FiniteOmegaCat>;

Cat share(FiniteOmegaCat x) { return std::make_shared<const FiniteOmegaCat>(std::move(x)); }

// {x} as the terminal category, included at x.
OmegaFunctor point_into_iso() {
  return functor_from_names(share(terminal(1)), share(walking_iso()),
                            {{{"*", "x"}}, {{"id(*)", "id(x)"}}});
}

}  // namespace

TEST_CASE("functor validation") {
  auto const wi = share(walking_iso());
  CHECK(is_functor(identity_functor(wi)).ok());
  CHECK(is_functor(to_terminal(wi)).ok());
  CHECK(is_functor(point_into_iso()).ok());
  auto bad = functor_from_names(wi, wi,
                                {{{"x", "x"}, {"y", "x"}},
                                 {{"id(x)", "id(x)"}, {"id(y)", "id(x)"},
                                  {"u", "id(x)"}, {"v", "v"}}});
  CHECK_FALSE(is_functor(bad).ok());
}

TEST_CASE("equifibrations") {
  auto const wi = share(walking_iso());
  CHECK(is_equifibration(to_terminal(wi)));
  CHECK(is_equifibration(identity_functor(wi)));
  auto v = is_equifibration(point_into_iso());
  REQUIRE_FALSE(v);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->cells.front() == "*");
}

TEST_CASE("weak equivalences") {
  CHECK(is_weak_equivalence(point_into_iso()));
  CHECK(is_weak_equivalence(identity_functor(share(flat_demo()))));
  CHECK_FALSE(is_weak_equivalence(to_terminal(share(globe_cat(1, 1)))));
}

TEST_CASE("trivial fibrations") {
  CHECK(is_trivial_fibration(identity_functor(share(walking_iso()))));
  // every square against a globe boundary lifts: x -> y and y -> x both
  // exist and the top dimension is faithful
  CHECK(is_trivial_fibration(to_terminal(share(walking_iso()))));
  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k < d; ++k) CHECK(is_trivial_fibration(to_terminal(share(cosep(k, d)))));
  // truncating at k drops the (k+1)-cells that make it faithful
  CHECK_FALSE(is_trivial_fibration(to_terminal(share(cosep(2, 2)))));
  CHECK_FALSE(is_trivial_fibration(point_into_iso()));
}

TEST_CASE("gaunt categories") {
  CHECK(is_gaunt(globe_cat(2, 2)));
  CHECK(is_gaunt(globe_cat(3, 3)));
  CHECK(is_gaunt(terminal(2)));
  CHECK_FALSE(is_gaunt(walking_iso()));
}

TEST_CASE("functor enumeration") {
  auto const wi = share(walking_iso());
  CHECK(enumerate_functors(share(terminal(1)), wi).size() == 2);
  CHECK(enumerate_functors(share(globe_cat(1, 1)), wi).size() == 4);
  CHECK(enumerate_functors(share(flat_demo()), share(terminal(2))).size() == 1);
  for (auto const& f : enumerate_functors(share(cosep(1, 2)), share(cosep(1, 2))))
    CHECK(is_functor(f).ok());
}

TEST_CASE("composite of functors") {
  auto const wi = share(walking_iso());
  auto const f = compose_functors(point_into_iso(), to_terminal(wi));
  CHECK(is_functor(f).ok());
  CHECK(is_trivial_fibration(f));
}

TEST_CASE("checkers agree with the definition-level truth table") {
  auto const small = small_corpus(5, 6, 24);
  std::size_t checked = 0;
  for (auto const& a : small)
    for (auto const& b : small) {
      if (a.cat->total_cells() > 12 || b.cat->total_cells() > 12) continue;
      for (auto const& f : enumerate_functors(a.cat, b.cat)) {
        auto const t = oracle::truth(f);
        CAPTURE(a.name);
        CAPTURE(b.name);
        CHECK(is_trivial_fibration(f).holds == t.trivial_fibration);
        CHECK(is_weak_equivalence(f).holds == t.weak_equivalence);
        CHECK(is_equifibration(f).holds == t.equifibration);
        ++checked;
      }
    }
  CHECK(checked > 100);
}

TEST_CASE("property: trivial fibrations reflect equivalences") {
  auto const small = small_corpus(9, 6, 24);
  for (auto const& f : corpus_functors(small)) {
    if (!is_trivial_fibration(f)) continue;
    Equivalences const dom(*f.dom), cod(*f.cod);
    for (int n = 1; n <= f.dom->trunc_dim(); ++n)
      for (Cell u : f.dom->cells(n))
        if (cod.contains(f.apply(u))) CHECK(dom.contains(u));
  }
}

TEST_CASE("property: failures carry counterexamples") {
  auto const small = small_corpus(9, 6, 16);
  for (auto const& f : corpus_functors(small)) {
    for (Verdict v : {is_trivial_fibration(f), is_weak_equivalence(f), is_equifibration(f)})
      if (!v) CHECK(v.counterexample.has_value());
  }
}
