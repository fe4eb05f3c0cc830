#pragma once

#include <functional>
#include <optional>

#include "omega/scat.hpp"

namespace omega {

using MonotoneOperator = std::function<CellSet(const CellSet&)>;

// Iterates `op` downward from the full set until it stabilizes. Throws
// NonMonotone if an iterate is not contained in its predecessor.
CellSet greatest_fixed_point(const FiniteOmegaCat& x,
                             const MonotoneOperator& op);

// One-step operators. Formal identities above the truncation count as
// members of every S, so a top-dimensional cell qualifies exactly when its
// inverse composites are strict identities.
CellSet phi(const FiniteOmegaCat& x, const CellSet& s);
CellSet psi(const FiniteOmegaCat& x, const CellSet& s);
CellSet rinv(const FiniteOmegaCat& x, const CellSet& s);

CellSet equivalences(const FiniteOmegaCat& x);
CellSet flat_equivalences(const FiniteOmegaCat& x);

// Membership in S with the formal-identity convention.
bool in_with_formal(const FiniteOmegaCat& x, const CellSet& s, Cell c);

// nu-Phi of one category, with the queries built on it.
class Equivalences {
 public:
  explicit Equivalences(const FiniteOmegaCat& x);

  const FiniteOmegaCat& category() const { return *x_; }
  const CellSet& cells() const { return set_; }
  bool contains(Cell c) const { return in_with_formal(*x_, set_, c); }

  // a ~ b: an equivalence (n+1)-cell a -> b. Throws on non-parallel input.
  bool similar(Cell a, Cell b) const;
  // Some v with u o v ~ id and v o u ~ id; nullopt if u is not an
  // equivalence.
  std::optional<Cell> find_inverse(Cell u) const;
  // All such v.
  std::vector<Cell> inverses(Cell u) const;

 private:
  const FiniteOmegaCat* x_;
  CellSet set_;
};

bool similar(const FiniteOmegaCat& x, Cell a, Cell b);
std::optional<Cell> find_inverse(const FiniteOmegaCat& x, Cell u);

}  // namespace omega
