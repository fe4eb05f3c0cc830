#include "omega/io.hpp"

#include <fstream>
#include <sstream>

#include "omega/error.hpp"

namespace omega {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

// {"<dim>": {...}} lookups tolerate absent dimensions.
const json* dim_entry(const json& j, const char* key, int dim) {
  if (!j.contains(key)) return nullptr;
  auto const& m = j.at(key);
  auto it = m.find(std::to_string(dim));
  return it == m.end() ? nullptr : &*it;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

// Globular data -------------------------------------------------------------

json to_json(const GlobularData& g) {
  json j;
  j["trunc_dim"] = g.trunc_dim();
  j["cells"] = json::array();
  json src = json::object(), tgt = json::object();
  for (int n = 0; n <= g.trunc_dim(); ++n) {
    j["cells"].push_back(g.names(n));
    if (n == 0) continue;
    json s = json::object(), t = json::object();
    for (std::size_t i = 0; i < g.count(n); ++i) {
      int const idx = static_cast<int>(i);
      if (g.src(n, idx) != kMissing)
        s[g.name(n, idx)] = g.name(n - 1, g.src(n, idx));
      if (g.tgt(n, idx) != kMissing)
        t[g.name(n, idx)] = g.name(n - 1, g.tgt(n, idx));
    }
    src[std::to_string(n)] = std::move(s);
    tgt[std::to_string(n)] = std::move(t);
  }
  j["src"] = std::move(src);
  j["tgt"] = std::move(tgt);
  return j;
}

GlobularData globular_from_json(const json& j) {
  return guarded("globular set", [&] {
    int const d = field(j, "trunc_dim").get<int>();
    auto const& cells = field(j, "cells");
    if (!cells.is_array() || static_cast<int>(cells.size()) > d + 1)
      throw InvalidInput("'cells' must list at most trunc_dim+1 dimensions");
    GlobularData g(d);
    for (int n = 0; n < static_cast<int>(cells.size()); ++n) {
      auto const* s = dim_entry(j, "src", n);
      auto const* t = dim_entry(j, "tgt", n);
      for (auto const& c : cells[n]) {
        auto const name = c.get<std::string>();
        if (g.find(n, name)) throw InvalidInput("duplicate cell '" + name + "'");
        int si = kMissing, ti = kMissing;
        auto lookup = [&](const json* m) {
          if (!m || !m->contains(name)) return kMissing;
          auto const b = m->at(name).get<std::string>();
          auto found = g.find(n - 1, b);
          if (!found) throw InvalidInput("unknown boundary '" + b + "' of '" +
                                         name + "'");
          return *found;
        };
        if (n > 0) {
          si = lookup(s);
          ti = lookup(t);
        }
        g.add_cell(n, name, si, ti);
      }
    }
    return g;
  });
}

// Categories ----------------------------------------------------------------

json to_json(const FiniteOmegaCat& x) {
  json j = to_json(x.underlying());
  int const d = x.trunc_dim();
  json ids = json::object();
  for (int n = 0; n < d; ++n) {
    json m = json::object();
    for (Cell c : x.cells(n)) m[x.name(c)] = x.name(x.identity(c));
    ids[std::to_string(n)] = std::move(m);
  }
  j["id"] = std::move(ids);
  json comp = json::object();
  for (auto const& [key, table] : x.tables()) {
    auto const [k, n] = key;
    auto const size = x.count(n);
    json rows = json::array();
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        int const r = table[a * size + b];
        if (r == kMissing) continue;
        rows.push_back({x.name({n, static_cast<int>(a)}),
                        x.name({n, static_cast<int>(b)}), x.name({n, r})});
      }
    comp[std::to_string(k) + "," + std::to_string(n)] = std::move(rows);
  }
  j["comp"] = std::move(comp);
  j["marking"] = to_json(x, x.marking());
  return j;
}

FiniteOmegaCat category_from_json(const json& j) {
  return guarded("category", [&] {
    GlobularData const g = globular_from_json(j);
    int const d = g.trunc_dim();
    CategoryBuilder b(d);
    for (int n = 0; n <= d; ++n)
      for (std::size_t i = 0; i < g.count(n); ++i) {
        int const idx = static_cast<int>(i);
        if (n == 0) {
          b.add_cell(0, g.name(0, idx));
          continue;
        }
        if (g.src(n, idx) == kMissing || g.tgt(n, idx) == kMissing)
          throw InvalidInput("cell '" + g.name(n, idx) + "' has no boundary");
        b.add_cell(n, g.name(n, idx), g.name(n - 1, g.src(n, idx)),
                   g.name(n - 1, g.tgt(n, idx)));
      }
    for (int n = 0; n < d; ++n)
      if (auto const* m = dim_entry(j, "id", n))
        for (auto const& [cell, id] : m->items())
          b.set_identity(n, cell, id.get<std::string>());
    if (j.contains("comp"))
      for (auto const& [key, rows] : j.at("comp").items()) {
        int k = 0, n = 0;
        char comma = 0;
        std::istringstream in(key);
        if (!(in >> k >> comma >> n) || comma != ',')
          throw InvalidInput("bad composition key '" + key + "'");
        for (auto const& row : rows) {
          if (!row.is_array() || row.size() != 3)
            throw InvalidInput("composition rows are [a, b, result]");
          b.set_comp(k, n, row[0].get<std::string>(), row[1].get<std::string>(),
                     row[2].get<std::string>());
        }
      }
    if (j.contains("marking")) {
      auto const& m = j.at("marking");
      for (std::size_t i = 0; i < m.size(); ++i)
        for (auto const& c : m[i]) b.mark(static_cast<int>(i) + 1, c.get<std::string>());
    }
    return b.build();
  });
}

FiniteOmegaCat read_category(const std::filesystem::path& path) {
  return category_from_json(read_json_file(path));
}

json to_json(const FiniteOmegaCat& x, const CellSet& s) {
  json j = json::array();
  for (int n = 1; n <= x.trunc_dim(); ++n) {
    json level = json::array();
    for (Cell c : x.cells(n))
      if (s.contains(c)) level.push_back(x.name(c));
    j.push_back(std::move(level));
  }
  return j;
}

CellSet cellset_from_json(const FiniteOmegaCat& x, const json& j) {
  return guarded("cell set", [&] {
    CellSet s = CellSet::empty(x);
    if (!j.is_array() || static_cast<int>(j.size()) > x.trunc_dim())
      throw InvalidInput("cell sets list dimensions 1..trunc_dim");
    for (std::size_t i = 0; i < j.size(); ++i)
      for (auto const& c : j[i])
        s.insert(x.cell(static_cast<int>(i) + 1, c.get<std::string>()));
    return s;
  });
}

// Functors ------------------------------------------------------------------

json to_json(const OmegaFunctor& f) {
  json j;
  j["dom"] = to_json(*f.dom);
  j["cod"] = to_json(*f.cod);
  json m = json::object();
  for (int n = 0; n <= f.dom->trunc_dim(); ++n) {
    json level = json::object();
    for (Cell c : f.dom->cells(n)) level[f.dom->name(c)] = f.cod->name(f.apply(c));
    m[std::to_string(n)] = std::move(level);
  }
  j["map"] = std::move(m);
  return j;
}

OmegaFunctor functor_from_json(const json& j,
                               const std::filesystem::path& base_dir) {
  return guarded("functor", [&] {
    auto side = [&](const char* key) {
      auto const& v = field(j, key);
      if (v.is_string())
        return std::make_shared<const FiniteOmegaCat>(
            read_category(base_dir / v.get<std::string>()));
      return std::make_shared<const FiniteOmegaCat>(category_from_json(v));
    };
    auto dom = side("dom");
    auto cod = side("cod");
    std::vector<std::vector<std::pair<std::string, std::string>>> pairs(
        static_cast<std::size_t>(dom->trunc_dim() + 1));
    auto const& m = field(j, "map");
    for (int n = 0; n <= dom->trunc_dim(); ++n) {
      auto it = m.find(std::to_string(n));
      if (it == m.end()) continue;
      for (auto const& [from, to] : it->items())
        pairs[n].emplace_back(from, to.get<std::string>());
    }
    OmegaFunctor f = functor_from_names(dom, cod, pairs);
    for (int n = 0; n <= dom->trunc_dim(); ++n)
      for (int img : f.map.images[n])
        if (img == kMissing)
          throw InvalidInput("functor map is missing a " + std::to_string(n) +
                             "-cell");
    return f;
  });
}

OmegaFunctor read_functor(const std::filesystem::path& path) {
  return functor_from_json(read_json_file(path), path.parent_path());
}

// Presentations -------------------------------------------------------------

json to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      return json::array({"gen", t.name()});
    case Term::Kind::Id:
      return json::array({"id", to_json(t.base()), t.count()});
    case Term::Kind::Comp:
      return json::array({"comp", t.k(), to_json(t.left()), to_json(t.right())});
  }
  return {};
}

Term term_from_json(const json& j, const Polygraph& p) {
  return guarded("term", [&]() -> Term {
    if (!j.is_array() || j.empty()) throw InvalidInput("terms are arrays");
    auto const tag = j[0].get<std::string>();
    if (tag == "gen" && j.size() == 2) return p.term(j[1].get<std::string>());
    if (tag == "id" && j.size() == 3)
      return Term::id(term_from_json(j[1], p), j[2].get<int>());
    if (tag == "comp" && j.size() == 4)
      return Term::comp(j[1].get<int>(), term_from_json(j[2], p),
                        term_from_json(j[3], p));
    throw InvalidInput("unknown term shape " + j.dump());
  });
}

json to_json(const Polygraph& p) {
  json j;
  j["max_dim"] = p.max_dim();
  json gens = json::array();
  for (auto const& g : p.generators()) {
    json e;
    e["name"] = g.name;
    e["dim"] = g.dim;
    e["src"] = g.src.valid() ? to_json(g.src) : json();
    e["tgt"] = g.tgt.valid() ? to_json(g.tgt) : json();
    e["marked"] = g.marked;
    e["address"] = g.address;
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  return j;
}

Polygraph polygraph_from_json(const json& j) {
  return guarded("polygraph", [&] {
    Polygraph p(field(j, "max_dim").get<int>());
    for (auto const& e : field(j, "generators")) {
      Generator g;
      g.name = field(e, "name").get<std::string>();
      g.dim = field(e, "dim").get<int>();
      if (g.dim > 0) {
        g.src = term_from_json(field(e, "src"), p);
        g.tgt = term_from_json(field(e, "tgt"), p);
      }
      g.marked = e.value("marked", false);
      g.address = e.value("address", std::string{});
      p.add(std::move(g));
    }
    return p;
  });
}

json to_json(const FiniteOmegaCat& x, const Assignment& a) {
  json j = json::object();
  for (auto const& [name, cell] : a) j[name] = x.name(cell);
  return j;
}

Assignment assignment_from_json(const json& j, const Polygraph& p,
                                const FiniteOmegaCat& x) {
  return guarded("assignment", [&] {
    Assignment a;
    for (auto const& [name, cell] : j.items())
      a[name] = x.cell(p.at(name).dim, cell.get<std::string>());
    return a;
  });
}

// Reports -------------------------------------------------------------------

json to_json(const ValidationReport& r) {
  json j;
  j["ok"] = r.ok();
  json vs = json::array();
  for (auto const& v : r.violations) {
    json e;
    e["rule"] = v.rule;
    e["dim"] = v.dim;
    e["cells"] = v.cells;
    if (!v.detail.empty()) e["detail"] = v.detail;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

json to_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (v.counterexample) {
    json c;
    c["dim"] = v.counterexample->dim;
    c["cells"] = v.counterexample->cells;
    c["note"] = v.counterexample->note;
    j["counterexample"] = std::move(c);
  }
  return j;
}

}  // namespace omega
