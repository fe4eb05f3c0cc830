#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/error.hpp"
#include "omega/poly.hpp"

using namespace omega;

TEST_CASE("normalization") {
  Term const x = Term::gen("x", 0), u = Term::gen("u", 1), v = Term::gen("v", 1);
  CHECK(normalize(Term::comp(0, Term::id(x, 1), u)) == u);
  CHECK(normalize(Term::comp(0, u, Term::id(Term::gen("y", 0), 1))) == u);
  CHECK(normalize(Term::id(Term::id(x, 1), 2)) == Term::id(x, 3));
  CHECK(normalize(Term::id(u, 0)) == u);
  // associativity is absorbed into left-associated chains
  Term const w = Term::gen("w", 1);
  CHECK(terms_equal(Term::comp(0, u, Term::comp(0, v, w)),
                    Term::comp(0, Term::comp(0, u, v), w)));
  CHECK_FALSE(terms_equal(Term::comp(0, u, v), Term::comp(0, v, u)));
}

TEST_CASE("boundaries of terms") {
  Polygraph p(2);
  p.add("x", 0, {}, {}, false, "s0");
  p.add("y", 0, {}, {}, false, "t0");
  p.add("u", 1, p.term("x"), p.term("y"), true, "u");
  p.add("v", 1, p.term("y"), p.term("x"), false, "v");
  auto [s, t] = term_boundary(Term::comp(0, p.term("u"), p.term("v")), p);
  CHECK(s == p.term("x"));
  CHECK(t == p.term("x"));
  CHECK_THROWS_AS(check_term(Term::comp(0, p.term("u"), p.term("u")), p), InvalidInput);
  CHECK(validate_polygraph(p).ok());
}

TEST_CASE("an ill-typed generator is reported") {
  Polygraph p(2);
  p.add("x", 0, {}, {}, false, "s0");
  p.add("y", 0, {}, {}, false, "t0");
  p.add("u", 1, p.term("x"), p.term("y"), false, "u");
  p.add("r", 2, p.term("u"), Term::id(p.term("x"), 1), false, "r");
  CHECK_FALSE(validate_polygraph(p).ok());
}

TEST_CASE("evaluation in walking_iso") {
  auto const wi = walking_iso();
  Assignment a{{"x", wi.cell(0, "x")}, {"y", wi.cell(0, "y")},
               {"u", wi.cell(1, "u")}, {"v", wi.cell(1, "v")}};
  Term const uv = Term::comp(0, Term::gen("u", 1), Term::gen("v", 1));
  CHECK(eval_term(uv, wi, a) == wi.identity(wi.cell(0, "x")));
  CHECK(eval_term(Term::id(Term::gen("x", 0), 2), wi, a) ==
        wi.lift(wi.cell(0, "x"), 2));
  Polygraph const f = emit_F(1);
  Assignment b = a;
  b["w"] = wi.cell(1, "v");
  CHECK(eval_term(f.at("p").src, wi, b) == wi.identity(wi.cell(0, "x")));
}

TEST_CASE("F and H") {
  auto const f1 = emit_F(1);
  CHECK(validate_polygraph(f1).ok());
  auto const c = census(f1);
  CHECK(c.total == std::vector<int>{2, 3, 2});
  CHECK(c.marked == std::vector<int>{0, 1, 2});
  CHECK(validate_polygraph(emit_H(1)).ok());
  CHECK_FALSE(presentations_isomorphic(f1, emit_H(1)));
  CHECK(presentations_isomorphic(emit_F(2), suspend_presentation(f1)));
  CHECK(presentations_isomorphic(f1, f1));
}

TEST_CASE("witness presentation counts") {
  for (int n = 1; n <= 3; ++n) {
    auto const c = census(emit_EF_witness(n, 7));
    for (int k = 0; k < n; ++k) CHECK(c.total[k] == 2);
    for (int m = 0; n + m <= 7; ++m) {
      CHECK(c.marked[n + m] == (1 << m));
      CHECK(c.total[n + m] == 3 * (1 << m));
    }
  }
}

TEST_CASE("ladder, witness and OR presentations agree") {
  for (int d = 1; d <= 7; ++d) {
    auto const w = emit_EF_witness(1, d);
    CHECK(validate_polygraph(w).ok());
    CHECK(presentations_isomorphic(w, ladder_colimit(1, d)));
    CHECK(presentations_isomorphic(w, emit_OR(d), false));
  }
  for (int n = 1; n <= 3; ++n)
    for (int d = n; d + 1 <= 7; ++d)
      CHECK(presentations_isomorphic(suspend_presentation(emit_EF_witness(n, d)),
                                     emit_EF_witness(n + 1, d + 1)));
}

TEST_CASE("ladder steps grow by the marked top generators") {
  auto const steps = emit_EF_ladder(1, 3);
  REQUIRE(steps.size() == 4);
  for (std::size_t i = 1; i < steps.size(); ++i)
    CHECK(steps[i].size() > steps[i - 1].size());
  CHECK(presentations_isomorphic(truncate(steps[3], 3), emit_EF_witness(1, 3)));
}

TEST_CASE("witness boundaries: the p cell runs from a composite to an identity") {
  auto const w = emit_EF_witness(1, 2);
  for (auto const& g : w.generators()) {
    if (g.dim != 2 || g.address.empty() || g.address.back() != 'p') continue;
    CHECK(g.tgt.is_identity());
    CHECK(g.src.kind() == Term::Kind::Comp);
  }
}
