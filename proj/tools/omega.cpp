// omega: command-line front door to the library.
// Exit codes: 0 success / property holds, 1 violation / property fails,
// 2 usage, malformed input, or budget exhausted.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "omega/coind.hpp"
#include "omega/corpus.hpp"
#include "omega/cyl.hpp"
#include "omega/error.hpp"
#include "omega/fib.hpp"
#include "omega/io.hpp"
#include "omega/lift.hpp"
#include "omega/poly.hpp"
#include "omega/quot.hpp"

using namespace omega;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

int emit(const json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? kOk : kViolation;
}

int emit_error(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  std::cout << j.dump(2) << "\n";
  return kUsage;
}

// validate -------------------------------------------------------------------

int run_validate(const std::string& file) {
  json const doc = read_json_file(file);
  json out;
  if (doc.contains("generators")) {
    out["kind"] = "polygraph";
    auto r = validate_polygraph(polygraph_from_json(doc));
    out["report"] = to_json(r);
    return emit(out, r.ok());
  }
  if (doc.contains("map")) {
    out["kind"] = "functor";
    auto f = functor_from_json(doc, std::filesystem::path(file).parent_path());
    ValidationReport r;
    r.merge(validate_category(*f.dom), "dom:");
    r.merge(validate_category(*f.cod), "cod:");
    if (r.ok()) r.merge(is_functor(f));
    out["report"] = to_json(r);
    return emit(out, r.ok());
  }
  if (doc.contains("id") || doc.contains("comp")) {
    out["kind"] = "category";
    auto r = validate_category(category_from_json(doc));
    out["report"] = to_json(r);
    return emit(out, r.ok());
  }
  out["kind"] = "globular";
  auto r = validate_globular(globular_from_json(doc));
  out["report"] = to_json(r);
  return emit(out, r.ok());
}

FiniteOmegaCat load_valid_category(const std::string& file) {
  FiniteOmegaCat x = read_category(file);
  auto r = validate_category(x);
  if (!r.ok())
    throw InvalidInput(file + " is not a valid category (" + r.violations[0].rule + ")");
  return x;
}

// equivs ---------------------------------------------------------------------

int run_equivs(const std::string& file) {
  FiniteOmegaCat const x = load_valid_category(file);
  CellSet const spherical = equivalences(x);
  CellSet const flat = flat_equivalences(x);
  json out;
  out["phi"] = to_json(x, spherical);
  out["psi"] = to_json(x, flat);
  out["counts"] = {{"phi", spherical.size()}, {"psi", flat.size()}};
  json diff = json::array();
  for (Cell c : CellSet::full(x).members())
    if (spherical.contains(c) != flat.contains(c)) diff.push_back(x.name(c));
  out["diff"] = diff;
  return emit(out, diff.empty());
}

// check-fib ------------------------------------------------------------------

int run_check_fib(const std::string& file, const std::string& mode) {
  json const doc = read_json_file(file);
  json out;
  out["mode"] = mode;
  if (mode == "gaunt" && !doc.contains("map")) {
    FiniteOmegaCat const x = load_valid_category(file);
    bool const g = is_gaunt(x);
    out["holds"] = g;
    return emit(out, g);
  }
  OmegaFunctor const f =
      functor_from_json(doc, std::filesystem::path(file).parent_path());
  ValidationReport shape;
  shape.merge(validate_category(*f.dom), "dom:");
  shape.merge(validate_category(*f.cod), "cod:");
  if (shape.ok()) shape.merge(is_functor(f));
  if (!shape.ok()) {
    out["holds"] = false;
    out["report"] = to_json(shape);
    return emit(out, false);
  }
  if (mode == "gaunt") {
    bool const d = is_gaunt(*f.dom), c = is_gaunt(*f.cod);
    out["dom"] = d;
    out["cod"] = c;
    out["holds"] = d && c;
    return emit(out, d && c);
  }
  Verdict v;
  if (mode == "equi") v = is_equifibration(f);
  else if (mode == "weq") v = is_weak_equivalence(f);
  else v = is_trivial_fibration(f);
  json j = to_json(v);
  j["mode"] = mode;
  return emit(j, v.holds);
}

// gen-walking ----------------------------------------------------------------

int run_gen_walking(const std::string& model, int n, int dim) {
  if (n < 1) throw InvalidInput("--n must be at least 1");
  Polygraph p;
  if (model == "F") {
    p = emit_F(n);
  } else if (model == "H") {
    p = emit_H(n);
  } else {
    if (dim < n) throw InvalidInput("--dim must be at least --n");
    if (model == "ladder") {
      p = ladder_colimit(n, dim);
    } else if (model == "witness") {
      p = emit_EF_witness(n, dim);
    } else {
      // the n = 1 model suspended up to n
      p = emit_OR(dim - (n - 1));
      for (int i = 1; i < n; ++i) p = suspend_presentation(p);
    }
  }
  Census const c = census(p);
  json out;
  out["model"] = model;
  out["n"] = n;
  if (model != "F" && model != "H") out["dim"] = dim;
  out["census"] = {{"total", c.total}, {"marked", c.marked}};
  out["polygraph"] = to_json(p);
  auto r = validate_polygraph(p);
  if (!r.ok()) out["report"] = to_json(r);
  return emit(out, r.ok());
}

// solve-lift -----------------------------------------------------------------

int run_solve_lift(const std::string& pres_file, const std::string& functor_file,
                   const std::string& target_file, const std::string& pin_file,
                   SearchOptions options) {
  Polygraph const p = polygraph_from_json(read_json_file(pres_file));
  OmegaFunctor const f = read_functor(functor_file);
  if (auto r = is_functor(f); !r.ok())
    throw InvalidInput(functor_file + " is not a functor (" + r.violations[0].rule + ")");
  LiftingProblem problem{p, {}, f, {}};
  problem.target = assignment_from_json(read_json_file(target_file), p, *f.cod);
  if (!verify_model(p, *f.cod, problem.target))
    throw InvalidInput("target is not a model of the presentation in cod");
  if (!pin_file.empty())
    problem.base = assignment_from_json(read_json_file(pin_file), p, *f.dom);
  for (auto const& [name, cell] : problem.base)
    if (f.apply(cell) != problem.target.at(name))
      throw InvalidInput("pin for '" + name + "' does not lie over the target");
  auto lift = solve_lift(problem, options);
  json out;
  out["found"] = lift.has_value();
  if (lift) {
    out["lift"] = to_json(*f.dom, *lift);
    out["verified"] = verify_lift(problem, *lift);
  } else {
    out["lift"] = nullptr;
  }
  return emit(out, lift.has_value());
}

// cylinder -------------------------------------------------------------------

int run_cylinder(const std::string& file, int level, bool projections,
                 std::size_t budget) {
  FiniteOmegaCat const x = load_valid_category(file);
  if (level < 0 || level > x.trunc_dim())
    throw InvalidInput("--level must lie in 0.." + std::to_string(x.trunc_dim()));
  Equivalences const eq(x);
  auto cyls = enumerate_cylinders(eq, level, budget);
  json out;
  out["level"] = level;
  out["count"] = cyls.size();
  json names = json::array();
  for (auto const& u : cyls) names.push_back(cylinder_name(x, u));
  out["cylinders"] = names;
  bool ok = true;
  if (projections) {
    ProjectionCheck const p = check_projections_trivfib(eq, level, budget);
    json j = to_json(p.verdict);
    j["levels_checked"] = p.levels_checked;
    out["projections"] = j;
    ok = p.verdict.holds;
  }
  return emit(out, ok);
}

// quotient -------------------------------------------------------------------

json quotient_json(const QuotientCategory& q, const FiniteOmegaCat& y) {
  json j;
  j["objects"] = q.objects;
  json classes = json::array();
  for (std::size_t i = 0; i < q.classes.size(); ++i) {
    auto const& c = q.classes[i];
    json e;
    e["src"] = q.objects[c.src];
    e["tgt"] = q.objects[c.tgt];
    json members = json::array();
    for (int m : c.members) members.push_back(y.name({1, m}));
    e["members"] = members;
    e["iso"] = q.is_iso(static_cast<int>(i));
    classes.push_back(e);
  }
  j["classes"] = classes;
  json comp = json::array();
  for (std::size_t a = 0; a < q.comp.size(); ++a)
    for (std::size_t b = 0; b < q.comp.size(); ++b)
      if (q.comp[a][b] != kMissing) comp.push_back({a, b, q.comp[a][b]});
  j["comp"] = comp;
  return j;
}

int run_quotient(const std::string& file, int level) {
  FiniteOmegaCat const x = load_valid_category(file);
  json out;
  out["level"] = level;
  if (level == 1) {
    QuotientCategory const q = tau1(x);
    ValidationReport const r = validate_quotient(q);
    out["quotient"] = quotient_json(q, x);
    out["report"] = to_json(r);
    out["witness_log"] = to_json(q.witness_log);
    return emit(out, r.ok() && q.witness_log.ok());
  }
  QuotientTwoCategory const t = tau2(x);
  ValidationReport const r = validate_two_category(x, t);
  out["objects"] = t.objects;
  json homs = json::array();
  for (auto const& [key, h] : t.homs) {
    json e;
    e["from"] = t.objects[key.first];
    e["to"] = t.objects[key.second];
    e["quotient"] = quotient_json(h.quotient, h.hom.cat);
    homs.push_back(e);
  }
  out["homs"] = homs;
  json horizontal = json::array();
  for (auto const& [abc, table] : t.horizontal)
    for (auto const& [ij, k] : table)
      horizontal.push_back({std::get<0>(abc), std::get<1>(abc), std::get<2>(abc),
                            ij.first, ij.second, k});
  out["horizontal"] = horizontal;
  json equivalences = json::array();
  for (Cell u : x.cells(1))
    if (equivalence_in_tau2(x, t, u)) equivalences.push_back(x.name(u));
  out["equivalence_1_cells"] = equivalences;
  out["report"] = to_json(r);
  out["witness_log"] = to_json(t.witness_log);
  return emit(out, r.ok() && t.witness_log.ok());
}

// corpus ---------------------------------------------------------------------

int run_corpus(std::uint32_t seed, const std::string& check,
               const std::string& spec_file) {
  json out;
  out["seed"] = seed;
  json results = json::array();
  bool ok = true;
  auto add = [&](const CheckResult& r) {
    ok = ok && r.holds;
    results.push_back(to_json(r));
  };
  if (!spec_file.empty()) {
    CorpusSpec const spec = read_corpus_spec(spec_file);
    out["spec"] = spec_file;
    if (check == "all" || check == "valid") add(check_valid(spec.categories));
    if (check == "all" || check == "spherical-flat") add(check_spherical_flat(spec.categories));
    if (check == "all" || check == "closure") add(check_closure(spec.categories));
    if (check == "all" || check == "classifier") add(check_classifier(spec.categories));
    if (check == "all" || check == "cylinders") add(check_cylinders(spec.categories));
    if (check == "all" || check == "quotient") add(check_quotient(spec.categories));
    if (check == "all" || check == "trivfib-decomposition") add(check_decomposition(spec.functors));
    if (check == "all" || check == "rlp") add(check_rlp(spec.functors));
  } else if (check == "all") {
    for (auto const& name : corpus_check_names()) add(run_corpus_check(name, seed));
  } else {
    add(run_corpus_check(check, seed));
  }
  out["results"] = results;
  out["holds"] = ok;
  return emit(out, ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite strict omega-categories: equivalences, fibrations, "
               "walking equivalences, cylinders, quotients"};
  app.require_subcommand(1);
  std::uint64_t budget = 0;
  app.add_option("--budget", budget,
                 "cap on search nodes / enumerated objects (0: defaults)");

  std::string file, mode, model, pres, functor, target, pin, check, spec;
  int n = 1, dim = 1, level = 0;
  std::uint32_t seed = 7;
  bool projections = false;

  auto* validate = app.add_subcommand("validate", "validate a JSON document");
  validate->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* equivs = app.add_subcommand("equivs", "spherical and flat equivalences");
  equivs->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* fib = app.add_subcommand("check-fib", "fibration properties of a functor");
  fib->add_option("file", file)->required()->check(CLI::ExistingFile);
  fib->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"equi", "weq", "trivfib", "gaunt"}));

  auto* walking = app.add_subcommand("gen-walking", "emit a walking-equivalence presentation");
  walking->add_option("--model", model)
      ->required()
      ->check(CLI::IsMember({"ladder", "witness", "or", "F", "H"}));
  walking->add_option("--n", n, "dimension of the equivalence")->required();
  walking->add_option("--dim", dim, "truncation");

  auto* lift = app.add_subcommand("solve-lift", "find a lift in a lifting problem");
  lift->add_option("--pres", pres)->required()->check(CLI::ExistingFile);
  lift->add_option("--functor", functor)->required()->check(CLI::ExistingFile);
  lift->add_option("--target", target)->required()->check(CLI::ExistingFile);
  lift->add_option("--pin", pin, "assignment into dom fixing part of the lift")
      ->check(CLI::ExistingFile);

  auto* cyl = app.add_subcommand("cylinder", "enumerate cylinders");
  cyl->add_option("file", file)->required()->check(CLI::ExistingFile);
  cyl->add_option("--level", level)->required();
  cyl->add_flag("--check-projections", projections);

  auto* quot = app.add_subcommand("quotient", "tau1 / tau2 quotients");
  quot->add_option("file", file)->required()->check(CLI::ExistingFile);
  quot->add_option("--level", level)->required()->check(CLI::IsMember({1, 2}));

  auto* corpus = app.add_subcommand("corpus", "run property checks over a corpus");
  corpus->add_option("--seed", seed);
  corpus->add_option("--check", check)->required();
  corpus->add_option("--spec", spec, "corpus file listing categories, functors, seeds")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return run_validate(file);
    if (*equivs) return run_equivs(file);
    if (*fib) return run_check_fib(file, mode);
    if (*walking) return run_gen_walking(model, n, dim);
    if (*lift) {
      SearchOptions options;
      if (budget) options.node_budget = budget;
      return run_solve_lift(pres, functor, target, pin, options);
    }
    if (*cyl)
      return run_cylinder(file, level, projections,
                          budget ? budget : kDefaultMaxCylinders);
    if (*quot) return run_quotient(file, level);
    if (*corpus) {
      if (check != "all") {
        auto names = corpus_check_names();
        if (std::find(names.begin(), names.end(), check) == names.end())
          return emit_error("usage", "unknown check '" + check + "'");
      }
      return run_corpus(seed, check, spec);
    }
  } catch (const InvalidInput& e) {
    return emit_error("invalid-input", e.what());
  } catch (const BudgetExceeded& e) {
    return emit_error("budget-exceeded", e.what());
  } catch (const NonMonotone& e) {
    return emit_error("non-monotone", e.what());
  }
  return kUsage;
}
