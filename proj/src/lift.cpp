#include "omega/lift.hpp"

#include <algorithm>
#include <string>

#include "omega/error.hpp"

namespace omega {

namespace {

using Filter = std::function<bool(const Generator&, Cell)>;

struct ModelSearch {
  const Polygraph& p;
  const FiniteOmegaCat& y;
  const Assignment& pins;
  const Filter& accept;
  SearchOptions options;
  bool stop_at_first;
  std::uint64_t nodes = 0;
  std::vector<const Generator*> order;
  Assignment current;
  std::vector<Assignment> results;

  std::vector<Cell> candidates(const Generator& g) {
    if (g.dim == 0) return y.cells(0);
    Cell s, t;
    try {
      s = eval_term(g.src, y, current);
      t = eval_term(g.tgt, y, current);
    } catch (const InvalidInput&) {
      return {};
    }
    return y.cells_between(s, t);
  }

  bool run(std::size_t pos) {
    if (++nodes > options.node_budget)
      throw BudgetExceeded("model search exceeded its node budget");
    if (pos == order.size()) {
      if (results.size() >= options.max_results)
        throw BudgetExceeded("model search exceeded its result budget");
      results.push_back(current);
      return stop_at_first;
    }
    auto const& g = *order[pos];
    auto pin = pins.find(g.name);
    for (Cell c : candidates(g)) {
      if (pin != pins.end() && pin->second != c) continue;
      if (accept && !accept(g, c)) continue;
      current[g.name] = c;
      if (run(pos + 1)) return true;
    }
    current.erase(g.name);
    return false;
  }
};

std::vector<Assignment> search(const Polygraph& p, const FiniteOmegaCat& y,
                               const Assignment& pins, const Filter& accept,
                               SearchOptions options, bool first_only) {
  for (auto const& [name, cell] : pins) {
    auto const& g = p.at(name);
    if (g.dim != cell.dim)
      throw InvalidInput("pin for '" + name + "' has the wrong dimension");
  }
  ModelSearch s{p, y, pins, accept, options, first_only};
  for (auto const& g : p.generators()) s.order.push_back(&g);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [](const Generator* a, const Generator* b) {
                     return a->dim < b->dim;
                   });
  s.run(0);
  return std::move(s.results);
}

}  // namespace

std::vector<Assignment> enumerate_models(const Polygraph& p,
                                         const FiniteOmegaCat& y,
                                         const Assignment& pins,
                                         SearchOptions options) {
  return search(p, y, pins, {}, options, false);
}

bool verify_model(const Polygraph& p, const FiniteOmegaCat& y,
                  const Assignment& a) {
  for (auto const& g : p.generators()) {
    auto it = a.find(g.name);
    if (it == a.end() || it->second.dim != g.dim) return false;
    if (it->second.index < 0 ||
        it->second.index >= static_cast<int>(y.count(g.dim)))
      return false;
    if (g.dim == 0) continue;
    try {
      if (eval_term(g.src, y, a) != y.src(it->second)) return false;
      if (eval_term(g.tgt, y, a) != y.tgt(it->second)) return false;
    } catch (const InvalidInput&) {
      return false;
    }
  }
  return true;
}

std::optional<Assignment> solve_lift(const LiftingProblem& problem,
                                     SearchOptions options) {
  auto const& f = problem.f;
  Filter accept = [&](const Generator& g, Cell c) {
    auto it = problem.target.find(g.name);
    if (it == problem.target.end())
      throw InvalidInput("target model does not assign '" + g.name + "'");
    return f.apply(c) == it->second;
  };
  auto found =
      search(problem.presentation, *f.dom, problem.base, accept, options, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool verify_lift(const LiftingProblem& problem, const Assignment& lift) {
  if (!verify_model(problem.presentation, *problem.f.dom, lift)) return false;
  for (auto const& [name, cell] : problem.base)
    if (lift.at(name) != cell) return false;
  for (auto const& [name, cell] : lift) {
    auto it = problem.target.find(name);
    if (it == problem.target.end() || problem.f.apply(cell) != it->second)
      return false;
  }
  return true;
}

Assignment pin_source(const Polygraph& witness, int n,
                      const FiniteOmegaCat& x, Cell source) {
  Assignment pins;
  for (auto const& g : witness.generators()) {
    if (g.dim >= n) break;
    bool const is_source = g.address[0] == 's';
    if (g.dim == n - 1) {
      if (is_source) pins[g.name] = source;
    } else {
      pins[g.name] =
          is_source ? x.src(source, g.dim) : x.tgt(source, g.dim);
    }
  }
  return pins;
}

Verdict check_rlp_JF(const OmegaFunctor& f, SearchOptions options) {
  auto const& dom = *f.dom;
  auto const& cod = *f.cod;
  int const top = std::max(dom.trunc_dim(), cod.trunc_dim());
  int const cut = top + 1;
  for (int n = 1; n <= top; ++n) {
    Polygraph const witness = emit_EF_witness(n, cut);
    for (Cell x : dom.cells(n - 1)) {
      Assignment const base = pin_source(witness, n, dom, x);
      Assignment const down = pin_source(witness, n, cod, f.apply(x));
      for (auto const& target : enumerate_models(witness, cod, down, options)) {
        LiftingProblem problem{witness, base, f, target};
        if (!solve_lift(problem, options))
          return Verdict::fail(n, {dom.name(x), cod.name(target.at("u"))},
                               "square against the witness presentation has "
                               "no diagonal");
      }
    }
  }
  return Verdict::pass();
}

}  // namespace omega
