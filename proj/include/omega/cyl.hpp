#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "omega/coind.hpp"
#include "omega/gset.hpp"
#include "omega/report.hpp"
#include "omega/scat.hpp"

namespace omega {

// An n-cylinder x ~> y, stored with all data as cells of the ambient X.
// Level n >= 1: flats[j], sharps[j] are the (j+1)-cell components met after
// descending j times into hom categories; core is the level-0 cylinder at the
// bottom, an (n+1)-cell. Level 0: core is the equivalence 1-cell itself.
struct Cylinder {
  int level = 0;
  Cell x;
  Cell y;
  std::vector<Cell> flats;
  std::vector<Cell> sharps;
  Cell core;

  friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

// Checks the inductive typing and that every component is an equivalence.
bool is_cylinder(const Equivalences& eq, const Cylinder& u);

inline constexpr std::size_t kDefaultMaxCylinders = 200'000;

// Throws BudgetExceeded past `max_cylinders`.
std::vector<Cylinder> enumerate_cylinders(
    const Equivalences& eq, int level,
    std::size_t max_cylinders = kDefaultMaxCylinders);
std::vector<Cylinder> enumerate_cylinders(
    const FiniteOmegaCat& x, int level,
    std::size_t max_cylinders = kDefaultMaxCylinders);

// Source and target (level-1) cylinders; level must be >= 1.
std::pair<Cylinder, Cylinder> cylinder_boundary(const FiniteOmegaCat& x,
                                                const Cylinder& u);

// The natural component, as a cylinder of one lower level whose endpoints
// are the two whiskered composites. Level must be >= 1.
Cylinder natural_component(const FiniteOmegaCat& x, const Cylinder& u);

// Cylinder u ~> u2 built from a chain u, v, u2 of equivalence n-cells.
Cylinder bridge(const Equivalences& eq, Cell u, Cell v, Cell u2);

// Levels 0..max_level of Gamma(X) as a globular set.
struct GammaSet {
  GlobularData cells;
  std::vector<std::vector<Cylinder>> by_level;
};
GammaSet gamma(const Equivalences& eq, int max_level,
               std::size_t max_cylinders = kDefaultMaxCylinders);

std::string cylinder_name(const FiniteOmegaCat& x, const Cylinder& u);

// Elementwise trivial-fibration condition for both projections
// Gamma(X) -> X, levels 0..up_to. Stops early, without failing, at the first
// level whose cylinders exceed the budget; `levels_checked` is the last level
// fully examined.
struct ProjectionCheck {
  Verdict verdict;
  int levels_checked = -1;
};
ProjectionCheck check_projections_trivfib(
    const Equivalences& eq, int up_to,
    std::size_t max_cylinders = kDefaultMaxCylinders);

}  // namespace omega
