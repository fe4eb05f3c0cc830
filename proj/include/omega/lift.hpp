#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "omega/fib.hpp"
#include "omega/poly.hpp"

namespace omega {

struct SearchOptions {
  std::uint64_t node_budget = 20'000'000;
  std::size_t max_results = 1'000'000;
};

// All assignments of P's generators to cells of Y that respect boundaries
// and the pins. Generators above Y's truncation can only take formal
// identities, so their two boundaries must evaluate equal.
std::vector<Assignment> enumerate_models(const Polygraph& p,
                                         const FiniteOmegaCat& y,
                                         const Assignment& pins = {},
                                         SearchOptions options = {});

// True when every generator is assigned and its evaluated boundaries match.
bool verify_model(const Polygraph& p, const FiniteOmegaCat& y,
                  const Assignment& a);

struct LiftingProblem {
  Polygraph presentation;
  Assignment base;    // pins into dom(f)
  OmegaFunctor f;
  Assignment target;  // a model of the presentation in cod(f)
};

// An assignment into dom(f) extending `base` whose image is `target`.
std::optional<Assignment> solve_lift(const LiftingProblem& problem,
                                     SearchOptions options = {});

bool verify_lift(const LiftingProblem& problem, const Assignment& lift);

// The witness presentation's globe generators pinned to the boundary of x,
// with the source of u pinned to x itself.
Assignment pin_source(const Polygraph& witness, int n,
                      const FiniteOmegaCat& x, Cell source);

// Right lifting against the witness presentations, cut one dimension above
// the larger truncation.
Verdict check_rlp_JF(const OmegaFunctor& f, SearchOptions options = {});

}  // namespace omega
