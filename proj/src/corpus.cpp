#include "omega/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "omega/coind.hpp"
#include "omega/cyl.hpp"
#include "omega/error.hpp"
#include "omega/fib.hpp"
#include "omega/lift.hpp"
#include "omega/quot.hpp"

namespace omega {

namespace {

// Plain modular draws keep corpora identical across standard libraries.
struct Rng {
  std::mt19937 gen;
  int pick(int n) { return static_cast<int>(gen() % static_cast<unsigned>(n)); }
  bool chance(int percent) { return pick(100) < percent; }
};

struct Named {
  std::string name;
  FiniteOmegaCat cat;
};

Named cyclic(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return {"Z" + std::to_string(n), monoid_category(table)};
}

// Monoid of self-maps of {0..m-1} generated by random maps.
Named transformation_monoid(Rng& rng) {
  int const m = 2 + rng.pick(2);
  int const gens = 1 + rng.pick(2);
  using Map = std::vector<int>;
  Map id(m);
  for (int i = 0; i < m; ++i) id[i] = i;
  std::vector<Map> generators;
  std::string name = "T" + std::to_string(m) + "{";
  for (int g = 0; g < gens; ++g) {
    Map f(m);
    for (int& v : f) v = rng.pick(m);
    generators.push_back(f);
    if (g) name += ";";
    for (int v : f) name += std::to_string(v);
  }
  name += "}";
  std::vector<Map> elements{id};
  std::map<Map, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (auto const& g : generators) {
      Map next(m);
      for (int p = 0; p < m; ++p) next[p] = g[elements[i][p]];
      if (index.emplace(next, static_cast<int>(elements.size())).second)
        elements.push_back(next);
    }
  auto const n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Map ab(m);
      for (int p = 0; p < m; ++p) ab[p] = elements[b][elements[a][p]];
      table[a][b] = index.at(ab);
    }
  return {name, monoid_category(table)};
}

Named random_preorder(Rng& rng) {
  int const n = 2 + rng.pick(3);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  std::string name = "P" + std::to_string(n) + "[";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      le[i][j] = i == j || rng.chance(30);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) name += le[i][j] ? '1' : '0';
  return {name + "]", preorder_category(le)};
}

Named idempotent() {
  return {"E", monoid_category({{0, 1}, {1, 1}}, {"id(*)", "e"})};
}

Named base_category(Rng& rng) {
  switch (rng.pick(7)) {
    case 0:
      return cyclic(1 + rng.pick(5));
    case 1:
    case 2:
      return transformation_monoid(rng);
    case 3:
      return random_preorder(rng);
    case 4:
      return {"iso", walking_iso()};
    case 5:
      return idempotent();
    default: {
      Named a = rng.chance(50) ? cyclic(1 + rng.pick(3)) : idempotent();
      Named b = rng.chance(50) ? Named{"iso", walking_iso()}
                               : Named{"G1", globe_cat(1, 1)};
      return {a.name + "+" + b.name, disjoint_union(a.cat, b.cat)};
    }
  }
}

// A 1-truncated base pushed up to dimension d by one of the templates.
Named lifted(Rng& rng, int d) {
  Named b = base_category(rng);
  auto wrap = [](const std::string& op, Named n, FiniteOmegaCat c) {
    return Named{op + "(" + n.name + ")", std::move(c)};
  };
  if (d <= 1) return b;
  switch (rng.pick(d == 2 ? 3 : 5)) {
    case 0:
      return wrap("raise" + std::to_string(d), b, raise_truncation(b.cat, d));
    case 1: {
      Named c = wrap("codiscrete_top", b, codiscrete_top(b.cat));
      if (d == 3) c = wrap("raise3", c, raise_truncation(c.cat, 3));
      return c;
    }
    case 2: {
      Named s = wrap("suspend", b, suspend(b.cat));
      if (d == 3) s = wrap("raise3", s, raise_truncation(s.cat, 3));
      return s;
    }
    case 3: {
      Named c = wrap("codiscrete_top", b, codiscrete_top(b.cat));
      return wrap("suspend", c, suspend(c.cat));
    }
    default: {
      Named c = wrap("codiscrete_top", b, codiscrete_top(b.cat));
      return wrap("codiscrete_top", c, codiscrete_top(c.cat));
    }
  }
}

Named random_instance(Rng& rng, int d) {
  if (rng.chance(15)) {
    Named a = lifted(rng, d);
    Named b = lifted(rng, d);
    return {a.name + "+" + b.name, disjoint_union(a.cat, b.cat)};
  }
  return lifted(rng, d);
}

std::size_t widest(const FiniteOmegaCat& x) {
  std::size_t w = 0;
  for (int n = 0; n <= x.trunc_dim(); ++n) w = std::max(w, x.count(n));
  return w;
}

struct Collector {
  std::size_t max_cells;
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;

  bool offer(Named n) {
    if (widest(n.cat) > max_cells) return false;
    auto key = to_json(n.cat).dump();
    if (!seen.insert(std::move(key)).second) return false;
    if (!validate_category(n.cat).ok())
      throw std::logic_error("template produced an invalid category: " +
                             n.name);
    out.push_back({n.name, std::make_shared<const FiniteOmegaCat>(
                               std::move(n.cat))});
    return true;
  }
};

std::vector<Named> fixed_fixtures() {
  return {
      {"flat_demo", flat_demo()},
      {"globe2", globe_cat(2, 2)},
      {"globe2@3", globe_cat(2, 3)},
      {"globe3", globe_cat(3, 3)},
      {"boundary_globe2", boundary_globe_cat(2, 2)},
      {"boundary_globe3", boundary_globe_cat(3, 3)},
      {"cosep(1,2)", cosep(1, 2)},
      {"cosep(1,3)", cosep(1, 3)},
      {"cosep(2,2)", cosep(2, 2)},
      {"cosep(2,3)", cosep(2, 3)},
      {"cosep(3,3)", cosep(3, 3)},
      {"terminal2", terminal(2)},
      {"terminal3", terminal(3)},
      {"suspend(iso)", suspend(walking_iso())},
      {"codiscrete_top(iso)", codiscrete_top(walking_iso())},
      {"raise2(iso)", raise_truncation(walking_iso(), 2)},
      {"suspend(flat_demo)", suspend(flat_demo())},
  };
}

std::vector<Named> small_fixtures() {
  return {
      {"terminal1", terminal(1)},
      {"terminal2", terminal(2)},
      {"iso", walking_iso()},
      {"globe1", globe_cat(1, 1)},
      {"boundary_globe1", boundary_globe_cat(1, 1)},
      {"globe2", globe_cat(2, 2)},
      {"cosep(1,2)", cosep(1, 2)},
      {"cosep(1,3)", cosep(1, 3)},
      cyclic(2),
      idempotent(),
      {"codiscrete_top(Z2)", codiscrete_top(cyclic(2).cat)},
      {"suspend(Z2)", suspend(cyclic(2).cat)},
  };
}

// Lazily computed equivalence sets keyed by category identity.
struct EqCache {
  std::map<const FiniteOmegaCat*, std::unique_ptr<Equivalences>> memo;
  const Equivalences& operator()(const FiniteOmegaCat& x) {
    auto& slot = memo[&x];
    if (!slot) slot = std::make_unique<Equivalences>(x);
    return *slot;
  }
};

void record(CheckResult& r, json counterexample) {
  if (r.violations++ == 0) r.details["counterexample"] = std::move(counterexample);
  r.holds = false;
}

json instance_json(const CorpusEntry& e) {
  json j;
  j["instance"] = e.name;
  j["category"] = to_json(*e.cat);
  return j;
}

}  // namespace

// Corpora -------------------------------------------------------------------

std::vector<CorpusEntry> generate_corpus(const CorpusOptions& options) {
  Collector c{options.max_cells_per_dim, {}, {}};
  for (auto& f : fixed_fixtures()) {
    int const d = f.cat.trunc_dim();
    if (d >= options.min_dim && d <= options.max_dim) c.offer(std::move(f));
  }
  Rng rng{std::mt19937(options.seed)};
  int const span = options.max_dim - options.min_dim + 1;
  for (std::size_t attempt = 0;
       c.out.size() < options.count && attempt < 100 * options.count;
       ++attempt)
    c.offer(random_instance(rng, options.min_dim + rng.pick(span)));
  if (c.out.size() > options.count) c.out.resize(options.count);
  return std::move(c.out);
}

std::vector<CorpusEntry> small_corpus(std::uint32_t seed,
                                      std::size_t max_cells_per_dim,
                                      std::size_t count) {
  Collector c{max_cells_per_dim, {}, {}};
  for (auto& f : small_fixtures()) c.offer(std::move(f));
  Rng rng{std::mt19937(seed)};
  for (std::size_t attempt = 0; c.out.size() < count && attempt < 200 * count;
       ++attempt)
    c.offer(random_instance(rng, 1 + rng.pick(2)));
  if (c.out.size() > count) c.out.resize(count);
  return std::move(c.out);
}

CorpusSpec read_corpus_spec(const std::filesystem::path& path) {
  json const j = read_json_file(path);
  auto const base = path.parent_path();
  CorpusSpec spec;
  try {
    for (auto const& p : j.value("categories", json::array())) {
      auto const file = p.get<std::string>();
      spec.categories.push_back(
          {file, std::make_shared<const FiniteOmegaCat>(read_category(base / file))});
    }
    for (auto const& p : j.value("functors", json::array()))
      spec.functors.push_back(read_functor(base / p.get<std::string>()));
    CorpusOptions options;
    options.count = j.value("count", options.count);
    options.max_cells_per_dim =
        j.value("max_cells_per_dim", options.max_cells_per_dim);
    for (auto const& s : j.value("seeds", json::array())) {
      options.seed = s.get<std::uint32_t>();
      for (auto& e : generate_corpus(options)) spec.categories.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return spec;
}

// Checks --------------------------------------------------------------------

CheckResult check_valid(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"valid"};
  for (auto const& e : corpus) {
    ++r.instances;
    auto report = validate_category(*e.cat);
    if (!report.ok()) {
      json c = instance_json(e);
      c["report"] = to_json(report);
      record(r, std::move(c));
    }
  }
  return r;
}

CheckResult check_spherical_flat(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"spherical-flat"};
  std::size_t cells = 0;
  for (auto const& e : corpus) {
    ++r.instances;
    auto const& x = *e.cat;
    CellSet const spherical = equivalences(x);
    CellSet const flat = flat_equivalences(x);
    cells += spherical.size();
    if (spherical != flat) {
      json c = instance_json(e);
      c["spherical"] = to_json(x, spherical);
      c["flat"] = to_json(x, flat);
      record(r, std::move(c));
    }
  }
  r.details["equivalence_cells"] = cells;
  return r;
}

CheckResult check_closure(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"closure"};
  std::size_t composites = 0, whiskers = 0;
  for (auto const& e : corpus) {
    ++r.instances;
    auto const& x = *e.cat;
    CellSet const s = flat_equivalences(x);
    auto fail = [&](const std::string& law, std::vector<Cell> cells) {
      json c = instance_json(e);
      c["law"] = law;
      for (Cell cell : cells) c["cells"].push_back(x.name(cell));
      record(r, std::move(c));
    };
    int const d = x.trunc_dim();
    for (int n = 1; n <= d; ++n)
      for (Cell a : x.cells(n)) {
        if (!s.contains(a)) continue;
        for (int k = 0; k < n; ++k) {
          for (Cell b : x.cells(n)) {
            if (!s.contains(b) || x.tgt(a, k) != x.src(b, k)) continue;
            ++composites;
            Cell const ab = x.compose(k, a, b);
            if (!in_with_formal(x, s, ab)) fail("composition", {a, b, ab});
          }
          for (int m = k + 1; m < n; ++m)
            for (Cell c : x.cells(m)) {
              if (x.tgt(a, k) == x.src(c, k)) {
                ++whiskers;
                Cell const ac = x.whisker(k, a, c);
                if (!in_with_formal(x, s, ac)) fail("whiskering", {a, c, ac});
              }
              if (x.tgt(c, k) == x.src(a, k)) {
                ++whiskers;
                Cell const ca = x.whisker(k, c, a);
                if (!in_with_formal(x, s, ca)) fail("whiskering", {c, a, ca});
              }
            }
        }
      }
    CellSet const inverses = rinv(x, s);
    if (!inverses.subset_of(s)) {
      std::vector<Cell> extra;
      for (Cell c : inverses.members())
        if (!s.contains(c)) extra.push_back(c);
      fail("rinv", extra);
    }
  }
  r.details["composites"] = composites;
  r.details["whiskerings"] = whiskers;
  return r;
}

CheckResult check_classifier(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"classifier"};
  std::map<std::pair<int, int>, GlobularData> classifiers;
  for (auto const& e : corpus) {
    ++r.instances;
    auto const& x = *e.cat;
    int const d = x.trunc_dim();
    for (int k = 1; k <= d; ++k) {
      auto it = classifiers.find({k, d});
      if (it == classifiers.end())
        it = classifiers.emplace(std::pair{k, d}, cosep(k, d).underlying()).first;
      auto const cells = x.count(k);
      std::uint64_t const expected = cells < 64 ? 1ull << cells : 0;
      std::uint64_t const got = count_maps(x.underlying(), it->second);
      if (got != expected) {
        json c = instance_json(e);
        c["k"] = k;
        c["maps"] = got;
        c["expected"] = expected;
        record(r, std::move(c));
      }
    }
  }
  // cosep(k, d) -> terminal(d) with the (k+1)-cells present, k < d
  json checked = json::array();
  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k < d; ++k) {
      auto const c = std::make_shared<const FiniteOmegaCat>(cosep(k, d));
      Verdict v = is_trivial_fibration(to_terminal(c));
      checked.push_back({k, d});
      if (!v) {
        json cx;
        cx["instance"] = "cosep(" + std::to_string(k) + "," + std::to_string(d) + ")";
        cx["verdict"] = to_json(v);
        record(r, std::move(cx));
      }
    }
  r.details["trivial_fibration_cases"] = std::move(checked);
  // The k = d truncation drops the (k+1)-cells; reported, not judged.
  json top = json::object();
  for (int d = 1; d <= 3; ++d) {
    auto const c = std::make_shared<const FiniteOmegaCat>(cosep(d, d));
    top["cosep(" + std::to_string(d) + "," + std::to_string(d) + ")"] =
        is_trivial_fibration(to_terminal(c)).holds;
  }
  r.details["top_truncated_cases"] = std::move(top);
  return r;
}

CheckResult check_cylinders(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"cylinders"};
  std::map<std::string, std::size_t> levels;
  std::size_t bridges = 0;
  for (auto const& e : corpus) {
    ++r.instances;
    auto const& x = *e.cat;
    Equivalences const eq(x);
    int const d = x.trunc_dim();
    ProjectionCheck const p = check_projections_trivfib(eq, d);
    ++levels[std::to_string(p.levels_checked)];
    if (!p.verdict) {
      json c = instance_json(e);
      c["verdict"] = to_json(p.verdict);
      record(r, std::move(c));
    }
    if (p.levels_checked >= 0) {
      GammaSet const g = gamma(eq, std::min(p.levels_checked, std::max(d - 1, 0)));
      auto report = validate_globular(g.cells);
      if (!report.ok()) {
        json c = instance_json(e);
        c["gamma"] = to_json(report);
        record(r, std::move(c));
      }
    }
    for (int n = 1; n <= d; ++n)
      for (Cell u : x.cells(n)) {
        if (!eq.contains(u)) continue;
        for (Cell v : x.cells(n)) {
          if (!eq.contains(v) || x.tgt(u) != x.src(v)) continue;
          for (Cell u2 : x.cells(n)) {
            if (!eq.contains(u2) || x.tgt(v) != x.src(u2)) continue;
            ++bridges;
            Cylinder const b = bridge(eq, u, v, u2);
            if (!is_cylinder(eq, b)) {
              json c = instance_json(e);
              c["bridge"] = cylinder_name(x, b);
              record(r, std::move(c));
            }
          }
        }
      }
  }
  r.details["levels_checked"] = levels;
  r.details["bridges"] = bridges;
  return r;
}

CheckResult check_quotient(const std::vector<CorpusEntry>& corpus) {
  CheckResult r{"quotient"};
  std::size_t one_cells = 0;
  for (auto const& e : corpus) {
    ++r.instances;
    auto const& x = *e.cat;
    Equivalences const eq(x);
    QuotientCategory const q = tau1(eq);
    auto fail = [&](const std::string& what, json extra) {
      json c = instance_json(e);
      c["failure"] = what;
      c["data"] = std::move(extra);
      record(r, std::move(c));
    };
    if (auto rep = validate_quotient(q); !rep.ok()) fail("tau1-axioms", to_json(rep));
    if (!q.witness_log.ok()) fail("tau1-witness-log", to_json(q.witness_log));
    for (Cell u : x.cells(1)) {
      ++one_cells;
      if (iso_in_quotient(q, u) != eq.contains(u)) fail("tau1-iso", x.name(u));
    }
    if (x.trunc_dim() < 2) continue;
    QuotientTwoCategory const t = tau2(x);
    if (auto rep = validate_two_category(x, t); !rep.ok())
      fail("tau2-axioms", to_json(rep));
    if (!t.witness_log.ok()) fail("tau2-witness-log", to_json(t.witness_log));
    for (Cell u : x.cells(1))
      if (equivalence_in_tau2(x, t, u) != eq.contains(u))
        fail("tau2-equivalence", x.name(u));
  }
  r.details["one_cells"] = one_cells;
  return r;
}

std::vector<OmegaFunctor> corpus_functors(const std::vector<CorpusEntry>& small,
                                          int max_cod_dim) {
  std::vector<OmegaFunctor> out;
  for (auto const& a : small)
    for (auto const& b : small) {
      if (b.cat->trunc_dim() > max_cod_dim) continue;
      for (auto& f : enumerate_functors(a.cat, b.cat)) out.push_back(std::move(f));
    }
  return out;
}

CheckResult check_decomposition(const std::vector<OmegaFunctor>& functors) {
  CheckResult r{"trivfib-decomposition"};
  EqCache eq;
  std::size_t tf = 0, we = 0, ef = 0;
  for (auto const& f : functors) {
    ++r.instances;
    bool const t = is_trivial_fibration(f).holds;
    bool const w = is_weak_equivalence(f, eq(*f.cod)).holds;
    bool const e = is_equifibration(f, eq(*f.dom), eq(*f.cod)).holds;
    tf += t;
    we += w;
    ef += e;
    if (t != (w && e)) {
      json c;
      c["functor"] = to_json(f);
      c["trivial_fibration"] = t;
      c["weak_equivalence"] = w;
      c["equifibration"] = e;
      record(r, std::move(c));
    }
  }
  r.details["trivial_fibrations"] = tf;
  r.details["weak_equivalences"] = we;
  r.details["equifibrations"] = ef;
  return r;
}

CheckResult check_decomposition(const std::vector<CorpusEntry>& small) {
  return check_decomposition(corpus_functors(small));
}

CheckResult check_rlp(const std::vector<OmegaFunctor>& functors) {
  CheckResult r{"rlp"};
  EqCache eq;
  std::size_t equi = 0;
  for (auto const& f : functors) {
    if (f.cod->trunc_dim() > 2) continue;
    ++r.instances;
    Verdict const lifting = check_rlp_JF(f);
    bool const e = is_equifibration(f, eq(*f.dom), eq(*f.cod)).holds;
    equi += e;
    if (lifting.holds != e) {
      json c;
      c["functor"] = to_json(f);
      c["rlp"] = to_json(lifting);
      c["equifibration"] = e;
      record(r, std::move(c));
    }
  }
  r.details["equifibrations"] = equi;
  return r;
}

CheckResult check_rlp(const std::vector<CorpusEntry>& small) {
  return check_rlp(corpus_functors(small, 2));
}

std::vector<std::string> corpus_check_names() {
  return {"valid",      "spherical-flat", "closure",  "trivfib-decomposition",
          "rlp",        "classifier",     "cylinders", "quotient"};
}

CheckResult run_corpus_check(const std::string& name, std::uint32_t seed) {
  CorpusOptions options;
  options.seed = seed;
  using Main = CheckResult (*)(const std::vector<CorpusEntry>&);
  static const std::map<std::string, Main> on_main = {
      {"valid", check_valid},         {"spherical-flat", check_spherical_flat},
      {"closure", check_closure},     {"classifier", check_classifier},
      {"cylinders", check_cylinders}, {"quotient", check_quotient}};
  if (auto it = on_main.find(name); it != on_main.end())
    return it->second(generate_corpus(options));
  if (name == "trivfib-decomposition")
    return check_decomposition(small_corpus(seed));
  if (name == "rlp") return check_rlp(small_corpus(seed));
  throw InvalidInput("unknown corpus check '" + name + "'");
}

json to_json(const CheckResult& r) {
  json j;
  j["check"] = r.name;
  j["holds"] = r.holds;
  j["instances"] = r.instances;
  j["violations"] = r.violations;
  j["details"] = r.details;
  return j;
}

}  // namespace omega
