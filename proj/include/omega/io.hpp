#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include <json.hpp>

#include "omega/coind.hpp"
#include "omega/fib.hpp"
#include "omega/gset.hpp"
#include "omega/poly.hpp"
#include "omega/report.hpp"
#include "omega/scat.hpp"

namespace omega {

using json = nlohmann::ordered_json;

// All readers throw InvalidInput on malformed documents.
json read_json_file(const std::filesystem::path& path);

json to_json(const GlobularData& g);
GlobularData globular_from_json(const json& j);

json to_json(const FiniteOmegaCat& x);
FiniteOmegaCat category_from_json(const json& j);
FiniteOmegaCat read_category(const std::filesystem::path& path);

json to_json(const FiniteOmegaCat& x, const CellSet& s);
CellSet cellset_from_json(const FiniteOmegaCat& x, const json& j);

// dom/cod are written inline.
json to_json(const OmegaFunctor& f);
// dom/cod may be inline objects or paths relative to `base_dir`.
OmegaFunctor functor_from_json(const json& j,
                               const std::filesystem::path& base_dir = {});
OmegaFunctor read_functor(const std::filesystem::path& path);

json to_json(const Term& t);
// Generator dimensions are looked up in `p`.
Term term_from_json(const json& j, const Polygraph& p);

json to_json(const Polygraph& p);
Polygraph polygraph_from_json(const json& j);

json to_json(const FiniteOmegaCat& x, const Assignment& a);
Assignment assignment_from_json(const json& j, const Polygraph& p,
                                const FiniteOmegaCat& x);

json to_json(const ValidationReport& r);
json to_json(const Verdict& v);

}  // namespace omega
