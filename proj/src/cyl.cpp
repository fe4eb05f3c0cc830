#include "omega/cyl.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>

#include "omega/error.hpp"

namespace omega {

namespace {

// Endpoints of the natural component at depth j+1: x o_j sharp, flat o_j y.
std::optional<std::pair<Cell, Cell>> descend(const FiniteOmegaCat& x, int j,
                                             Cell a, Cell b, Cell flat,
                                             Cell sharp) {
  auto a2 = x.try_compose(j, a, x.lift(sharp, a.dim));
  auto b2 = x.try_compose(j, x.lift(flat, b.dim), b);
  if (!a2 || !b2) return std::nullopt;
  return std::pair{*a2, *b2};
}

bool check_at(const Equivalences& eq, const Cylinder& u, int j, Cell a,
              Cell b) {
  auto const& x = eq.category();
  if (j == u.level)
    return u.core.dim == j + 1 && x.src(u.core) == a && x.tgt(u.core) == b &&
           eq.contains(u.core);
  Cell const f = u.flats[j], s = u.sharps[j];
  if (f.dim != j + 1 || s.dim != j + 1) return false;
  if (x.src(f) != x.src(a, j) || x.tgt(f) != x.src(b, j)) return false;
  if (x.src(s) != x.tgt(a, j) || x.tgt(s) != x.tgt(b, j)) return false;
  if (!eq.contains(f) || !eq.contains(s)) return false;
  auto next = descend(x, j, a, b, f, s);
  return next && check_at(eq, u, j + 1, next->first, next->second);
}

void generate(const Equivalences& eq, Cylinder& u, int j, Cell a, Cell b,
              std::vector<Cylinder>& out, std::size_t cap) {
  auto const& x = eq.category();
  if (j == u.level) {
    for (Cell c : x.cells_between(a, b))
      if (eq.contains(c)) {
        if (out.size() >= cap)
          throw BudgetExceeded("more than " + std::to_string(cap) +
                               " cylinders at level " +
                               std::to_string(u.level));
        u.core = c;
        out.push_back(u);
      }
    return;
  }
  for (Cell f : x.cells_between(x.src(a, j), x.src(b, j))) {
    if (!eq.contains(f)) continue;
    for (Cell s : x.cells_between(x.tgt(a, j), x.tgt(b, j))) {
      if (!eq.contains(s)) continue;
      auto next = descend(x, j, a, b, f, s);
      if (!next) continue;
      u.flats.push_back(f);
      u.sharps.push_back(s);
      generate(eq, u, j + 1, next->first, next->second, out, cap);
      u.flats.pop_back();
      u.sharps.pop_back();
    }
  }
}

}  // namespace

bool is_cylinder(const Equivalences& eq, const Cylinder& u) {
  if (u.level < 0 || static_cast<int>(u.flats.size()) != u.level ||
      static_cast<int>(u.sharps.size()) != u.level)
    return false;
  if (u.x.dim != u.level || u.y.dim != u.level) return false;
  return check_at(eq, u, 0, u.x, u.y);
}

std::vector<Cylinder> enumerate_cylinders(const Equivalences& eq, int level,
                                          std::size_t max_cylinders) {
  auto const& x = eq.category();
  if (level < 0) throw InvalidInput("cylinder level must be non-negative");
  std::vector<Cylinder> out;
  for (Cell a : x.cells(level))
    for (Cell b : x.cells(level)) {
      Cylinder u;
      u.level = level;
      u.x = a;
      u.y = b;
      generate(eq, u, 0, a, b, out, max_cylinders);
    }
  return out;
}

std::vector<Cylinder> enumerate_cylinders(const FiniteOmegaCat& x, int level,
                                          std::size_t max_cylinders) {
  return enumerate_cylinders(Equivalences(x), level, max_cylinders);
}

std::pair<Cylinder, Cylinder> cylinder_boundary(const FiniteOmegaCat& x,
                                                const Cylinder& u) {
  if (u.level < 1) throw InvalidInput("0-cylinders have no boundary");
  int const n = u.level;
  Cylinder s, t;
  s.level = t.level = n - 1;
  s.x = x.src(u.x);
  s.y = x.src(u.y);
  t.x = x.tgt(u.x);
  t.y = x.tgt(u.y);
  s.flats = t.flats = {u.flats.begin(), u.flats.begin() + (n - 1)};
  s.sharps = t.sharps = {u.sharps.begin(), u.sharps.begin() + (n - 1)};
  s.core = u.flats[n - 1];
  t.core = u.sharps[n - 1];
  return {s, t};
}

Cylinder natural_component(const FiniteOmegaCat& x, const Cylinder& u) {
  if (u.level < 1) throw InvalidInput("0-cylinders have no natural component");
  auto ends = descend(x, 0, u.x, u.y, u.flats[0], u.sharps[0]);
  if (!ends) throw InvalidInput("cylinder is ill-typed");
  Cylinder out;
  out.level = u.level - 1;
  out.x = ends->first;
  out.y = ends->second;
  out.flats = {u.flats.begin() + 1, u.flats.end()};
  out.sharps = {u.sharps.begin() + 1, u.sharps.end()};
  out.core = u.core;
  return out;
}

Cylinder bridge(const Equivalences& eq, Cell u, Cell v, Cell u2) {
  auto const& x = eq.category();
  int const n = u.dim;
  if (n < 1 || v.dim != n || u2.dim != n)
    throw InvalidInput("bridge needs three cells of one dimension >= 1");
  if (x.tgt(u) != x.src(v) || x.tgt(v) != x.src(u2))
    throw InvalidInput("bridge needs a composable chain");
  for (Cell c : {u, v, u2})
    if (!eq.contains(c))
      throw InvalidInput("bridge needs equivalence cells; " + x.name(c) +
                         " is not one");
  Cylinder out;
  out.level = n;
  out.x = u;
  out.y = u2;
  for (int j = 0; j + 1 < n; ++j) {
    out.flats.push_back(x.identity(x.src(u, j)));
    out.sharps.push_back(x.identity(x.tgt(u, j)));
  }
  out.flats.push_back(x.compose(n - 1, u, v));
  out.sharps.push_back(x.compose(n - 1, v, u2));
  out.core = x.identity(x.compose(n - 1, u, x.compose(n - 1, v, u2)));
  return out;
}

std::string cylinder_name(const FiniteOmegaCat& x, const Cylinder& u) {
  std::string out = "[" + x.name(u.x) + "~>" + x.name(u.y);
  for (int j = 0; j < u.level; ++j)
    out += "|" + x.name(u.flats[j]) + "," + x.name(u.sharps[j]);
  return out + "|" + x.name(u.core) + "]";
}

GammaSet gamma(const Equivalences& eq, int max_level,
               std::size_t max_cylinders) {
  auto const& x = eq.category();
  GammaSet g;
  g.cells = GlobularData(max_level);
  std::map<Cylinder, int> previous;
  for (int n = 0; n <= max_level; ++n) {
    g.by_level.push_back(enumerate_cylinders(eq, n, max_cylinders));
    std::map<Cylinder, int> current;
    for (auto const& u : g.by_level.back()) {
      int s = kMissing, t = kMissing;
      if (n > 0) {
        auto [bs, bt] = cylinder_boundary(x, u);
        if (auto it = previous.find(bs); it != previous.end()) s = it->second;
        if (auto it = previous.find(bt); it != previous.end()) t = it->second;
      }
      current[u] = g.cells.add_cell(n, cylinder_name(x, u), s, t);
    }
    previous = std::move(current);
  }
  return g;
}

ProjectionCheck check_projections_trivfib(const Equivalences& eq, int up_to,
                                          std::size_t max_cylinders) {
  auto const& x = eq.category();
  ProjectionCheck out;
  std::vector<Cylinder> lower = enumerate_cylinders(eq, 0, max_cylinders);
  for (int which = 1; which <= 2; ++which)
    for (Cell c : x.cells(0)) {
      bool found = false;
      for (auto const& u : lower)
        if ((which == 1 ? u.x : u.y) == c) found = true;
      if (!found) {
        out.verdict = Verdict::fail(0, {x.name(c)},
                                    "projection " + std::to_string(which) +
                                        " misses this 0-cell");
        return out;
      }
    }
  out.levels_checked = 0;
  for (int n = 1; n <= up_to; ++n) {
    std::vector<Cylinder> upper;
    try {
      upper = enumerate_cylinders(eq, n, max_cylinders);
    } catch (const BudgetExceeded&) {
      return out;
    }
    // lower cylinders that may bound a common upper one
    std::vector<std::vector<std::size_t>> groups;
    if (n == 1) {
      groups.emplace_back();
      for (std::size_t i = 0; i < lower.size(); ++i) groups[0].push_back(i);
    } else {
      std::map<std::pair<Cylinder, Cylinder>, std::size_t> slot;
      for (std::size_t i = 0; i < lower.size(); ++i) {
        auto [it, fresh] =
            slot.emplace(cylinder_boundary(x, lower[i]), groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(i);
      }
    }
    for (int which = 1; which <= 2; ++which) {
      auto proj = [which](const Cylinder& u) { return which == 1 ? u.x : u.y; };
      std::set<std::tuple<Cylinder, Cylinder, Cell>> hit;
      for (auto const& u : upper) {
        auto [s, t] = cylinder_boundary(x, u);
        hit.emplace(std::move(s), std::move(t), proj(u));
      }
      for (auto const& group : groups)
        for (std::size_t ia : group)
          for (std::size_t ib : group) {
            auto const& a = lower[ia];
            auto const& b = lower[ib];
            for (Cell c : x.cells_between(proj(a), proj(b)))
              if (!hit.count({a, b, c})) {
                out.verdict = Verdict::fail(
                    n, {cylinder_name(x, a), cylinder_name(x, b), x.name(c)},
                    "projection " + std::to_string(which) +
                        " has no cylinder over this cell");
                return out;
              }
          }
    }
    out.levels_checked = n;
    lower = std::move(upper);
  }
  return out;
}

}  // namespace omega
