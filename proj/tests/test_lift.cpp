#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "omega/corpus.hpp"
#include "omega/error.hpp"
#include "omega/lift.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

using Cat = std::shared_ptr<const FiniteOmegaCat>;

Cat share(FiniteOmegaCat x) { return std::make_shared<const FiniteOmegaCat>(std::move(x)); }

OmegaFunctor point_into_iso() {
  return functor_from_names(share(terminal(1)), share(walking_iso()),
                            {{{"*", "x"}}, {{"id(*)", "id(x)"}}});
}

}  // namespace

TEST_CASE("models of F in walking_iso") {
  auto const wi = walking_iso();
  auto const f = truncate(emit_F(1), 2);
  auto const models = enumerate_models(f, wi, {{"u", wi.cell(1, "u")}});
  REQUIRE(models.size() == 1);
  auto const& m = models.front();
  CHECK(m.at("v") == wi.cell(1, "v"));
  CHECK(m.at("w") == wi.cell(1, "v"));
  CHECK(wi.is_identity(m.at("p")));
  CHECK(wi.is_identity(m.at("q")));
  for (auto const& a : models) CHECK(verify_model(f, wi, a));
  auto const g = globe_cat(1, 1);
  CHECK(enumerate_models(f, g, {{"u", g.cell(1, "c")}}).empty());
}

TEST_CASE("models of the marked globe are its top cells") {
  for (auto const& x : {walking_iso(), flat_demo(), cosep(1, 2)})
    for (int n = 1; n <= x.trunc_dim(); ++n)
      CHECK(enumerate_models(emit_marked_globe(n), x).size() == x.count(n));
}

TEST_CASE("pins of the wrong dimension are rejected") {
  auto const wi = walking_iso();
  CHECK_THROWS_AS(enumerate_models(emit_F(1), wi, {{"u", wi.cell(0, "x")}}),
                  InvalidInput);
}

TEST_CASE("lifting problems") {
  auto const wi = share(walking_iso());
  auto const w = emit_EF_witness(1, 2);
  // identity: the target itself lifts
  auto const id = identity_functor(wi);
  for (auto const& target : enumerate_models(w, *wi)) {
    LiftingProblem problem{w, {}, id, target};
    auto lift = solve_lift(problem);
    REQUIRE(lift);
    CHECK(*lift == target);
  }
  // to the terminal category, pinned at x
  auto const t = to_terminal(wi);
  for (auto const& target : enumerate_models(w, *t.cod)) {
    LiftingProblem problem{w, pin_source(w, 1, *wi, wi->cell(0, "x")), t, target};
    auto lift = solve_lift(problem);
    REQUIRE(lift);
    CHECK(verify_lift(problem, *lift));
  }
  // the point inclusion cannot lift u
  auto const p = point_into_iso();
  Assignment down = pin_source(w, 1, *p.cod, p.cod->cell(0, "x"));
  down["u"] = p.cod->cell(1, "u");
  auto targets = enumerate_models(w, *p.cod, down);
  REQUIRE_FALSE(targets.empty());
  LiftingProblem problem{w, pin_source(w, 1, *p.dom, p.dom->cell(0, "*")), p,
                         targets.front()};
  CHECK_FALSE(solve_lift(problem));
}

TEST_CASE("check_rlp_JF on small functors") {
  auto const wi = share(walking_iso());
  CHECK(check_rlp_JF(identity_functor(wi)));
  CHECK(check_rlp_JF(to_terminal(wi)));
  CHECK_FALSE(check_rlp_JF(point_into_iso()));
}

TEST_CASE("solver finds a lift exactly when brute force does") {
  auto const small = small_corpus(13, 4, 14);
  std::size_t problems = 0;
  for (auto const& f : corpus_functors(small, 2)) {
    if (f.dom->total_cells() > 10 || f.cod->total_cells() > 10) continue;
    int const top = std::max(f.dom->trunc_dim(), f.cod->trunc_dim());
    auto const w = emit_EF_witness(1, std::min(top + 1, 3));
    for (auto const& target : enumerate_models(w, *f.cod)) {
      LiftingProblem problem{w, {}, f, target};
      auto lift = solve_lift(problem);
      CHECK(lift.has_value() == oracle::has_lift_brute(problem));
      if (lift) CHECK(verify_lift(problem, *lift));
      ++problems;
    }
  }
  CHECK(problems > 50);
}

TEST_CASE("search budgets are enforced") {
  auto const x = cosep(1, 2);
  SearchOptions tight;
  tight.node_budget = 5;
  CHECK_THROWS_AS(enumerate_models(emit_EF_witness(1, 2), x, {}, tight), BudgetExceeded);
}
