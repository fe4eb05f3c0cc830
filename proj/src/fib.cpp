#include "omega/fib.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "omega/error.hpp"

namespace omega {

Cell OmegaFunctor::apply(Cell c) const {
  int const d = dom->trunc_dim();
  if (c.dim <= d) return {c.dim, map(c.dim, c.index)};
  return cod->lift(Cell{d, map(d, c.index)}, c.dim);
}

OmegaFunctor identity_functor(std::shared_ptr<const FiniteOmegaCat> x) {
  OmegaFunctor f{x, x, {}};
  for (int n = 0; n <= x->trunc_dim(); ++n) {
    f.map.images.emplace_back();
    for (int i = 0; i < static_cast<int>(x->count(n)); ++i)
      f.map.images.back().push_back(i);
  }
  return f;
}

OmegaFunctor to_terminal(std::shared_ptr<const FiniteOmegaCat> x) {
  auto t = std::make_shared<const FiniteOmegaCat>(
      terminal(std::max(x->trunc_dim(), 0)));
  OmegaFunctor f{x, t, {}};
  for (int n = 0; n <= x->trunc_dim(); ++n)
    f.map.images.emplace_back(x->count(n), 0);
  return f;
}

OmegaFunctor functor_from_names(
    std::shared_ptr<const FiniteOmegaCat> dom,
    std::shared_ptr<const FiniteOmegaCat> cod,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& map) {
  OmegaFunctor f{dom, cod, {}};
  int const d = dom->trunc_dim();
  f.map.images.resize(static_cast<std::size_t>(d + 1));
  for (int n = 0; n <= d; ++n) {
    f.map.images[n].assign(dom->count(n), kMissing);
    if (n >= static_cast<int>(map.size())) continue;
    for (auto const& [from, to] : map[n])
      f.map.images[n][dom->cell(n, from).index] = cod->cell(n, to).index;
  }
  return f;
}

OmegaFunctor compose_functors(const OmegaFunctor& f, const OmegaFunctor& g) {
  OmegaFunctor h{f.dom, g.cod, {}};
  for (int n = 0; n <= f.dom->trunc_dim(); ++n) {
    h.map.images.emplace_back();
    for (Cell c : f.dom->cells(n))
      h.map.images.back().push_back(g.apply(f.apply(c)).index);
  }
  return h;
}

ValidationReport is_functor(const OmegaFunctor& f) {
  ValidationReport report;
  auto const& x = *f.dom;
  auto const& y = *f.cod;
  int const d = x.trunc_dim();
  if (static_cast<int>(f.map.images.size()) != d + 1) {
    report.add("map-shape", -1, {}, "map must cover dimensions 0..dom.trunc_dim");
    return report;
  }
  for (int n = 0; n <= d; ++n) {
    if (f.map.images[n].size() != x.count(n)) {
      report.add("map-shape", n, {}, "map does not cover every cell");
      continue;
    }
    for (Cell c : x.cells(n)) {
      int const img = f.map(n, c.index);
      if (img < 0 || img >= static_cast<int>(y.count(n)))
        report.add("image-reference", n, {x.name(c)});
    }
  }
  if (!report.ok()) return report;
  for (int n = 1; n <= d; ++n)
    for (Cell c : x.cells(n)) {
      Cell const img = f.apply(c);
      if (y.src(img) != f.apply(x.src(c)) || y.tgt(img) != f.apply(x.tgt(c)))
        report.add("boundary-preservation", n, {x.name(c), y.name(img)});
    }
  if (!report.ok()) return report;
  for (int n = 0; n < d; ++n)
    for (Cell c : x.cells(n))
      if (f.apply(x.identity(c)) != y.identity(f.apply(c)))
        report.add("identity-preservation", n, {x.name(c)});
  for (int n = 1; n <= d; ++n)
    for (int k = 0; k < n; ++k)
      for (Cell a : x.cells(n))
        for (Cell b : x.cells(n)) {
          auto r = x.try_compose(k, a, b);
          if (!r) continue;
          auto s = y.try_compose(k, f.apply(a), f.apply(b));
          if (!s || *s != f.apply(*r))
            report.add("composition-preservation", n, {x.name(a), x.name(b)},
                       "along " + std::to_string(k));
        }
  return report;
}

int check_ceiling(const OmegaFunctor& f) {
  return std::max(f.dom->trunc_dim(), f.cod->trunc_dim()) + 1;
}

namespace {

Verdict equifibration_impl(const OmegaFunctor& f, const Equivalences& dom_eq,
                           const Equivalences& cod_eq, bool from_source) {
  auto const& x = *f.dom;
  auto const& y = *f.cod;
  auto end = [&](const FiniteOmegaCat& c, Cell u) {
    return from_source ? c.src(u) : c.tgt(u);
  };
  for (int n = 1; n <= check_ceiling(f); ++n) {
    // (end(ubar), f(ubar)) for every equivalence n-cell ubar upstairs
    std::set<std::pair<int, int>> lifts;
    for (Cell c : x.cells(n))
      if (dom_eq.contains(c))
        lifts.insert({end(x, c).index, f.apply(c).index});
    for (Cell c : x.cells(n - 1)) {
      Cell const fc = f.apply(c);
      for (Cell u : y.cells(n)) {
        if (end(y, u) != fc || !cod_eq.contains(u)) continue;
        if (!lifts.count({c.index, u.index}))
          return Verdict::fail(n, {x.name(c), y.name(u)},
                               "no equivalence lift of this cell");
      }
    }
  }
  return Verdict::pass();
}

// Shared body of the weak-equivalence and trivial-fibration checks; `hit`
// decides when an upstairs image answers a downstairs cell.
template <class Hit>
Verdict lifting_conditions(const OmegaFunctor& f, bool up_to_similarity,
                           const Equivalences* cod_eq, Hit hit) {
  auto const& x = *f.dom;
  auto const& y = *f.cod;
  for (Cell t : y.cells(0)) {
    bool found = false;
    for (Cell s : x.cells(0)) {
      Cell const fs = f.apply(s);
      if (fs == t || (up_to_similarity && cod_eq->similar(fs, t))) {
        found = true;
        break;
      }
    }
    if (!found)
      return Verdict::fail(0, {y.name(t)},
                           up_to_similarity ? "no 0-cell maps near this one"
                                            : "0-cell is not in the image");
  }
  for (int n = 1; n <= check_ceiling(f); ++n)
    for (Cell a : x.cells(n - 1)) {
      std::vector<Cell> partners;
      if (n == 1)
        partners = x.cells(0);
      else
        for (Cell b : x.cells(n - 1))
          if (x.parallel(a, b)) partners.push_back(b);
      for (Cell b : partners) {
        auto const ups = x.cells_between(a, b);
        for (Cell u : y.cells_between(f.apply(a), f.apply(b))) {
          bool found = false;
          for (Cell ub : ups)
            if (hit(f.apply(ub), u)) {
              found = true;
              break;
            }
          if (!found)
            return Verdict::fail(n, {x.name(a), x.name(b), y.name(u)},
                                 "no cell between the pair answers this one");
        }
      }
    }
  return Verdict::pass();
}

}  // namespace

Verdict is_equifibration(const OmegaFunctor& f, const Equivalences& dom_eq,
                         const Equivalences& cod_eq) {
  return equifibration_impl(f, dom_eq, cod_eq, true);
}

Verdict is_equifibration(const OmegaFunctor& f) {
  Equivalences const dom_eq(*f.dom), cod_eq(*f.cod);
  return is_equifibration(f, dom_eq, cod_eq);
}

Verdict is_symmetric_equifibration(const OmegaFunctor& f) {
  Equivalences const dom_eq(*f.dom), cod_eq(*f.cod);
  return equifibration_impl(f, dom_eq, cod_eq, false);
}

Verdict is_weak_equivalence(const OmegaFunctor& f, const Equivalences& cod_eq) {
  return lifting_conditions(f, true, &cod_eq, [&](Cell image, Cell u) {
    return cod_eq.similar(image, u);
  });
}

Verdict is_weak_equivalence(const OmegaFunctor& f) {
  Equivalences const cod_eq(*f.cod);
  return is_weak_equivalence(f, cod_eq);
}

Verdict is_trivial_fibration(const OmegaFunctor& f) {
  return lifting_conditions(f, false, nullptr,
                            [](Cell image, Cell u) { return image == u; });
}

bool is_gaunt(const FiniteOmegaCat& x) {
  for (Cell c : equivalences(x).members())
    if (!x.is_identity(c)) return false;
  return true;
}

// Enumeration ---------------------------------------------------------------

namespace {

struct Triple {
  int k, a, b, r;
};

struct FunctorSearch {
  const FiniteOmegaCat& x;
  const FiniteOmegaCat& y;
  EnumerateOptions options;
  std::uint64_t nodes = 0;
  GradedMap map;
  // identity_of[n][i]: the (n-1)-cell whose identity is cell i, or kMissing
  std::vector<std::vector<int>> identity_of;
  // checks[n][i]: composites whose three cells are all <= i, one equal to i
  std::vector<std::vector<std::vector<Triple>>> checks;
  std::vector<std::pair<int, int>> order;
  std::vector<GradedMap> results;

  Cell image(int n, int i) const { return {n, map(n, i)}; }

  bool consistent(int n, int i) const {
    for (auto const& t : checks[n][i]) {
      auto s = y.try_compose(t.k, image(n, t.a), image(n, t.b));
      if (!s || *s != image(n, t.r)) return false;
    }
    return true;
  }

  void run(std::size_t pos) {
    if (++nodes > options.node_budget)
      throw BudgetExceeded("functor enumeration exceeded its node budget");
    if (pos == order.size()) {
      if (results.size() >= options.max_results)
        throw BudgetExceeded("functor enumeration exceeded its result budget");
      results.push_back(map);
      return;
    }
    auto [n, i] = order[pos];
    std::vector<Cell> candidates;
    if (n == 0) {
      candidates = y.cells(0);
    } else if (identity_of[n][i] != kMissing) {
      candidates.push_back(y.identity(image(n - 1, identity_of[n][i])));
    } else {
      Cell const c{n, i};
      candidates = y.cells_between(image(n - 1, x.src(c).index),
                                   image(n - 1, x.tgt(c).index));
    }
    for (Cell c : candidates) {
      map.images[n][i] = c.index;
      if (consistent(n, i)) run(pos + 1);
    }
    map.images[n][i] = kMissing;
  }
};

}  // namespace

std::vector<OmegaFunctor> enumerate_functors(
    std::shared_ptr<const FiniteOmegaCat> x,
    std::shared_ptr<const FiniteOmegaCat> y, EnumerateOptions options) {
  int const d = x->trunc_dim();
  FunctorSearch search{*x, *y, options};
  search.map.images.resize(static_cast<std::size_t>(d + 1));
  search.identity_of.resize(static_cast<std::size_t>(d + 1));
  search.checks.resize(static_cast<std::size_t>(d + 1));
  for (int n = 0; n <= d; ++n) {
    auto const count = static_cast<int>(x->count(n));
    search.map.images[n].assign(x->count(n), kMissing);
    search.identity_of[n].assign(x->count(n), kMissing);
    search.checks[n].resize(x->count(n));
    if (n > 0)
      for (Cell c : x->cells(n - 1))
        search.identity_of[n][x->identity(c).index] = c.index;
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) {
          auto r = x->try_compose(k, {n, a}, {n, b});
          if (!r) continue;
          int const top = std::max({a, b, r->index});
          search.checks[n][top].push_back({k, a, b, r->index});
        }
    for (int i = 0; i < count; ++i) search.order.emplace_back(n, i);
  }
  search.run(0);
  std::vector<OmegaFunctor> out;
  out.reserve(search.results.size());
  for (auto& m : search.results) out.push_back({x, y, std::move(m)});
  return out;
}

}  // namespace omega
