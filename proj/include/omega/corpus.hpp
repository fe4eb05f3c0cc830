#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "omega/io.hpp"
#include "omega/scat.hpp"

namespace omega {

struct CorpusEntry {
  std::string name;  // how the instance was built
  std::shared_ptr<const FiniteOmegaCat> cat;
};

struct CorpusOptions {
  std::uint32_t seed = 7;
  std::size_t count = 120;
  std::size_t max_cells_per_dim = 20;
  int min_dim = 2;
  int max_dim = 3;
};

// Fixed fixtures followed by seeded random instances built from templates,
// all valid by construction (and re-validated), distinct as tables.
std::vector<CorpusEntry> generate_corpus(const CorpusOptions& options = {});

// Instances with at most `max_cells_per_dim` cells per dimension and
// dimension 1..3, for exhaustive functor enumeration.
std::vector<CorpusEntry> small_corpus(std::uint32_t seed,
                                      std::size_t max_cells_per_dim = 6,
                                      std::size_t count = 16);

// Categories and functors listed in a JSON corpus file:
// {"categories": [paths], "functors": [paths], "seeds": [..],
//  "count": n, "max_cells_per_dim": m}. Paths are relative to the file.
struct CorpusSpec {
  std::vector<CorpusEntry> categories;
  std::vector<OmegaFunctor> functors;
};
CorpusSpec read_corpus_spec(const std::filesystem::path& path);

struct CheckResult {
  std::string name;
  bool holds = true;
  std::size_t instances = 0;
  std::size_t violations = 0;
  json details = json::object();  // first counterexample and statistics
};

CheckResult check_valid(const std::vector<CorpusEntry>& corpus);
CheckResult check_spherical_flat(const std::vector<CorpusEntry>& corpus);
CheckResult check_closure(const std::vector<CorpusEntry>& corpus);
CheckResult check_classifier(const std::vector<CorpusEntry>& corpus);
CheckResult check_cylinders(const std::vector<CorpusEntry>& corpus);
CheckResult check_quotient(const std::vector<CorpusEntry>& corpus);

// Over every functor between ordered pairs of `small`.
CheckResult check_decomposition(const std::vector<CorpusEntry>& small);
CheckResult check_rlp(const std::vector<CorpusEntry>& small);
// The same checks over an explicit functor list.
CheckResult check_decomposition(const std::vector<OmegaFunctor>& functors);
CheckResult check_rlp(const std::vector<OmegaFunctor>& functors);

std::vector<OmegaFunctor> corpus_functors(const std::vector<CorpusEntry>& small,
                                          int max_cod_dim = 99);

std::vector<std::string> corpus_check_names();
// Dispatches by name; throws InvalidInput for unknown names.
CheckResult run_corpus_check(const std::string& name, std::uint32_t seed);

json to_json(const CheckResult& r);

}  // namespace omega
