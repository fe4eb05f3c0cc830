#pragma once
// Test-side reference implementations. They follow the definitions as
// literally as possible and share no search code with the library: only the
// raw tables (boundaries, identities, composites) are read.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "omega/error.hpp"
#include "omega/fib.hpp"
#include "omega/lift.hpp"
#include "omega/poly.hpp"
#include "omega/scat.hpp"

namespace oracle {

using omega::Cell;
using omega::FiniteOmegaCat;

// Cells of dimension m; above the truncation, the formal identities on the
// top cells.
inline std::vector<Cell> cells(const FiniteOmegaCat& x, int m) {
  int const d = x.trunc_dim();
  int const from = m <= d ? m : d;
  std::vector<Cell> out;
  for (std::size_t i = 0; i < x.underlying().count(from); ++i)
    out.push_back({m, static_cast<int>(i)});
  return out;
}

inline Cell src(const FiniteOmegaCat& x, Cell c) {
  int const d = x.trunc_dim();
  if (c.dim > d) return {c.dim - 1, c.index};
  return {c.dim - 1, x.underlying().src(c.dim, c.index)};
}

inline Cell tgt(const FiniteOmegaCat& x, Cell c) {
  int const d = x.trunc_dim();
  if (c.dim > d) return {c.dim - 1, c.index};
  return {c.dim - 1, x.underlying().tgt(c.dim, c.index)};
}

inline std::vector<Cell> between(const FiniteOmegaCat& x, Cell a, Cell b) {
  std::vector<Cell> out;
  for (Cell c : cells(x, a.dim + 1))
    if (src(x, c) == a && tgt(x, c) == b) out.push_back(c);
  return out;
}

inline Cell id(const FiniteOmegaCat& x, Cell c) {
  if (c.dim >= x.trunc_dim()) return {c.dim + 1, c.index};
  return {c.dim + 1, x.identity_entry(c.dim, c.index)};
}

// n-cells composed along their (n-1)-boundary; nullopt when not composable.
inline std::optional<Cell> comp(const FiniteOmegaCat& x, Cell a, Cell b) {
  if (tgt(x, a) != src(x, b)) return std::nullopt;
  int const n = a.dim;
  if (n > x.trunc_dim()) return a;  // formal identities on equal cells
  int const r = x.table_entry(n - 1, n, a.index, b.index);
  if (r < 0) return std::nullopt;
  return Cell{n, r};
}

// Positive-dimensional stored cells, the universe for subsets.
inline std::vector<Cell> universe(const FiniteOmegaCat& x) {
  std::vector<Cell> out;
  for (int n = 1; n <= x.trunc_dim(); ++n)
    for (Cell c : cells(x, n)) out.push_back(c);
  return out;
}

using Subset = std::set<Cell>;

inline bool member(const FiniteOmegaCat& x, const Subset& s, Cell c) {
  return c.dim > x.trunc_dim() || s.count(c) > 0;
}

// Some (n+1)-cell from a to b lying in S.
inline bool witness(const FiniteOmegaCat& x, const Subset& s, Cell a, Cell b) {
  for (Cell r : between(x, a, b))
    if (member(x, s, r)) return true;
  return false;
}

// u in Phi(S): one v with both witnesses. Psi: v and w separately.
inline bool in_phi(const FiniteOmegaCat& x, const Subset& s, Cell u) {
  for (Cell v : between(x, tgt(x, u), src(x, u))) {
    auto uv = comp(x, u, v), vu = comp(x, v, u);
    if (uv && vu && witness(x, s, *uv, id(x, src(x, u))) &&
        witness(x, s, *vu, id(x, tgt(x, u))))
      return true;
  }
  return false;
}

inline bool in_psi(const FiniteOmegaCat& x, const Subset& s, Cell u) {
  bool right = false, left = false;
  for (Cell v : between(x, tgt(x, u), src(x, u))) {
    auto uv = comp(x, u, v), vu = comp(x, v, u);
    right = right || (uv && witness(x, s, *uv, id(x, src(x, u))));
    left = left || (vu && witness(x, s, *vu, id(x, tgt(x, u))));
  }
  return right && left;
}

// Union of all post-fixed points S <= F(S), by enumerating every subset.
inline Subset greatest_by_enumeration(
    const FiniteOmegaCat& x,
    const std::function<bool(const Subset&, Cell)>& op) {
  auto const all = universe(x);
  if (all.size() > 20) throw std::runtime_error("oracle universe too large");
  Subset result;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    Subset s;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) s.insert(all[i]);
    bool post = true;
    for (Cell c : s)
      if (!op(s, c)) {
        post = false;
        break;
      }
    if (post) result.insert(s.begin(), s.end());
  }
  return result;
}

inline Subset nu_phi(const FiniteOmegaCat& x) {
  return greatest_by_enumeration(
      x, [&](const Subset& s, Cell c) { return in_phi(x, s, c); });
}

inline Subset nu_psi(const FiniteOmegaCat& x) {
  return greatest_by_enumeration(
      x, [&](const Subset& s, Cell c) { return in_psi(x, s, c); });
}

// Fibration truth table ------------------------------------------------------

struct Truth {
  bool trivial_fibration;
  bool weak_equivalence;
  bool equifibration;
};

inline Cell image(const omega::OmegaFunctor& f, Cell c) { return f.apply(c); }

inline Truth truth(const omega::OmegaFunctor& f) {
  auto const& dom = *f.dom;
  auto const& cod = *f.cod;
  Subset const eq_dom = nu_phi(dom), eq_cod = nu_phi(cod);
  auto equivalent = [](const FiniteOmegaCat& x, const Subset& s, Cell c) {
    return member(x, s, c);
  };
  // parallel a ~ b in cod
  auto similar = [&](Cell a, Cell b) {
    for (Cell r : between(cod, a, b))
      if (equivalent(cod, eq_cod, r)) return true;
    return false;
  };
  int const top = std::max(dom.trunc_dim(), cod.trunc_dim()) + 1;

  Truth t{true, true, true};
  // dimension 0
  for (Cell y : cells(cod, 0)) {
    bool exact = false, up_to = false;
    for (Cell x : cells(dom, 0)) {
      exact = exact || image(f, x) == y;
      up_to = up_to || image(f, x) == y ||
              (!between(cod, image(f, x), y).empty() && similar(image(f, x), y));
    }
    t.trivial_fibration = t.trivial_fibration && exact;
    t.weak_equivalence = t.weak_equivalence && up_to;
  }
  for (int n = 1; n <= top; ++n) {
    auto lower = cells(dom, n - 1);
    for (Cell a : lower)
      for (Cell b : lower) {
        if (n > 1 && (src(dom, a) != src(dom, b) || tgt(dom, a) != tgt(dom, b)))
          continue;
        auto const over = between(dom, a, b);
        for (Cell u : between(cod, image(f, a), image(f, b))) {
          bool exact = false, up_to = false;
          for (Cell w : over) {
            Cell const fw = image(f, w);
            exact = exact || fw == u;
            up_to = up_to || fw == u || similar(fw, u);
          }
          t.trivial_fibration = t.trivial_fibration && exact;
          t.weak_equivalence = t.weak_equivalence && up_to;
        }
      }
    // equifibration at dimension n
    for (Cell x : lower)
      for (Cell u : cells(cod, n)) {
        if (src(cod, u) != image(f, x) || !equivalent(cod, eq_cod, u)) continue;
        bool lifted = false;
        for (Cell w : cells(dom, n))
          if (src(dom, w) == x && image(f, w) == u &&
              equivalent(dom, eq_dom, w))
            lifted = true;
        t.equifibration = t.equifibration && lifted;
      }
  }
  return t;
}

// Lifts by brute force -------------------------------------------------------

// Every assignment of generators to cells of x satisfying the boundary
// equations, by plain cartesian product.
inline std::vector<omega::Assignment> all_models(const omega::Polygraph& p,
                                                 const FiniteOmegaCat& x) {
  std::vector<omega::Assignment> out{{}};
  for (auto const& g : p.generators()) {
    std::vector<omega::Assignment> next;
    for (auto const& a : out)
      for (Cell c : cells(x, g.dim)) {
        omega::Assignment b = a;
        b[g.name] = c;
        if (g.dim > 0) {
          try {
            if (omega::eval_term(g.src, x, b) != x.src(c) ||
                omega::eval_term(g.tgt, x, b) != x.tgt(c))
              continue;
          } catch (const omega::InvalidInput&) {
            continue;
          }
        }
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

inline bool has_lift_brute(const omega::LiftingProblem& problem) {
  for (auto const& a : all_models(problem.presentation, *problem.f.dom)) {
    bool ok = true;
    for (auto const& [name, cell] : problem.base) ok = ok && a.at(name) == cell;
    for (auto const& [name, cell] : a)
      ok = ok && problem.f.apply(cell) == problem.target.at(name);
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
