#include "omega/coind.hpp"

#include "omega/error.hpp"

namespace omega {

bool in_with_formal(const FiniteOmegaCat& x, const CellSet& s, Cell c) {
  if (c.dim > x.trunc_dim()) return true;
  return s.contains(c);
}

namespace {

// Some (n+1)-cell a -> b lying in S.
bool has_witness(const FiniteOmegaCat& x, const CellSet& s, Cell a, Cell b) {
  for (Cell c : x.cells_between(a, b))
    if (in_with_formal(x, s, c)) return true;
  return false;
}

// u o_{n-1} v -> id(s(u)) in S
bool right_witness(const FiniteOmegaCat& x, const CellSet& s, Cell u, Cell v) {
  return has_witness(x, s, x.compose(u.dim - 1, u, v), x.identity(x.src(u)));
}

// w o_{n-1} u -> id(t(u)) in S
bool left_witness(const FiniteOmegaCat& x, const CellSet& s, Cell w, Cell u) {
  return has_witness(x, s, x.compose(u.dim - 1, w, u), x.identity(x.tgt(u)));
}

std::vector<Cell> reverse_cells(const FiniteOmegaCat& x, Cell u) {
  return x.cells_between(x.tgt(u), x.src(u));
}

}  // namespace

CellSet greatest_fixed_point(const FiniteOmegaCat& x,
                             const MonotoneOperator& op) {
  CellSet current = CellSet::full(x);
  std::size_t const bound = current.size() + 1;
  for (std::size_t step = 0; step <= bound; ++step) {
    CellSet next = op(current);
    if (!next.subset_of(current))
      throw NonMonotone("operator iterate grew during fixed-point iteration");
    if (next == current) return current;
    current = std::move(next);
  }
  throw NonMonotone("fixed-point iteration did not stabilize");
}

CellSet phi(const FiniteOmegaCat& x, const CellSet& s) {
  CellSet out = CellSet::empty(x);
  for (int n = 1; n <= x.trunc_dim(); ++n)
    for (Cell u : x.cells(n))
      for (Cell v : reverse_cells(x, u))
        if (right_witness(x, s, u, v) && left_witness(x, s, v, u)) {
          out.insert(u);
          break;
        }
  return out;
}

CellSet psi(const FiniteOmegaCat& x, const CellSet& s) {
  CellSet out = CellSet::empty(x);
  for (int n = 1; n <= x.trunc_dim(); ++n)
    for (Cell u : x.cells(n)) {
      auto const back = reverse_cells(x, u);
      bool right = false, left = false;
      for (Cell v : back)
        if ((right = right_witness(x, s, u, v))) break;
      if (!right) continue;
      for (Cell w : back)
        if ((left = left_witness(x, s, w, u))) break;
      if (left) out.insert(u);
    }
  return out;
}

CellSet rinv(const FiniteOmegaCat& x, const CellSet& s) {
  CellSet out = CellSet::empty(x);
  for (int n = 1; n <= x.trunc_dim(); ++n)
    for (Cell u : x.cells(n)) {
      auto const back = reverse_cells(x, u);
      bool left = false;
      for (Cell w : back)
        if ((left = left_witness(x, s, w, u))) break;
      if (!left) continue;
      for (Cell v : back)
        if (right_witness(x, s, u, v)) out.insert(v);
    }
  return out;
}

CellSet equivalences(const FiniteOmegaCat& x) {
  return greatest_fixed_point(x, [&](const CellSet& s) { return phi(x, s); });
}

CellSet flat_equivalences(const FiniteOmegaCat& x) {
  return greatest_fixed_point(x, [&](const CellSet& s) { return psi(x, s); });
}

Equivalences::Equivalences(const FiniteOmegaCat& x)
    : x_(&x), set_(equivalences(x)) {}

bool Equivalences::similar(Cell a, Cell b) const {
  if (!x_->parallel(a, b))
    throw InvalidInput("similarity is only defined on parallel cells");
  return has_witness(*x_, set_, a, b);
}

std::vector<Cell> Equivalences::inverses(Cell u) const {
  std::vector<Cell> out;
  if (u.dim == 0 || !contains(u)) return out;
  for (Cell v : reverse_cells(*x_, u))
    if (right_witness(*x_, set_, u, v) && left_witness(*x_, set_, v, u))
      out.push_back(v);
  return out;
}

std::optional<Cell> Equivalences::find_inverse(Cell u) const {
  auto all = inverses(u);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool similar(const FiniteOmegaCat& x, Cell a, Cell b) {
  return Equivalences(x).similar(a, b);
}

std::optional<Cell> find_inverse(const FiniteOmegaCat& x, Cell u) {
  return Equivalences(x).find_inverse(u);
}

}  // namespace omega
