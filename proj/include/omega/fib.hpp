#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "omega/coind.hpp"
#include "omega/report.hpp"
#include "omega/scat.hpp"

namespace omega {

// A graded cell map between two table categories. `map.images[n]` covers
// dom's n-cells for n <= dom.trunc_dim; above cod's truncation an image
// index names a formal identity of cod.
struct OmegaFunctor {
  std::shared_ptr<const FiniteOmegaCat> dom;
  std::shared_ptr<const FiniteOmegaCat> cod;
  GradedMap map;

  Cell apply(Cell c) const;
};

OmegaFunctor identity_functor(std::shared_ptr<const FiniteOmegaCat> x);
// The unique functor into terminal(d) for d = max(x.trunc_dim, 0).
OmegaFunctor to_terminal(std::shared_ptr<const FiniteOmegaCat> x);
// Builds a functor from name pairs per dimension; throws on unknown names.
OmegaFunctor functor_from_names(
    std::shared_ptr<const FiniteOmegaCat> dom,
    std::shared_ptr<const FiniteOmegaCat> cod,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& map);
OmegaFunctor compose_functors(const OmegaFunctor& f, const OmegaFunctor& g);

ValidationReport is_functor(const OmegaFunctor& f);

// Highest dimension any check has to visit: above it both sides consist of
// formal identities only.
int check_ceiling(const OmegaFunctor& f);

Verdict is_equifibration(const OmegaFunctor& f);
// The mirrored condition, lifting equivalences that end at an image cell.
Verdict is_symmetric_equifibration(const OmegaFunctor& f);
Verdict is_weak_equivalence(const OmegaFunctor& f);
Verdict is_trivial_fibration(const OmegaFunctor& f);
bool is_gaunt(const FiniteOmegaCat& x);

// Variants that reuse precomputed equivalence sets.
Verdict is_equifibration(const OmegaFunctor& f, const Equivalences& dom_eq,
                         const Equivalences& cod_eq);
Verdict is_weak_equivalence(const OmegaFunctor& f, const Equivalences& cod_eq);

struct EnumerateOptions {
  std::uint64_t node_budget = 5'000'000;
  std::size_t max_results = 100'000;
};

std::vector<OmegaFunctor> enumerate_functors(
    std::shared_ptr<const FiniteOmegaCat> x,
    std::shared_ptr<const FiniteOmegaCat> y, EnumerateOptions options = {});

}  // namespace omega
