#include "omega/scat.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "omega/error.hpp"

namespace omega {

namespace {

std::string identity_name(const std::string& base, int times) {
  std::string out = base;
  for (int i = 0; i < times; ++i) out = "id(" + out + ")";
  return out;
}

// Strips `times` enclosing "id(...)" wrappers, if present.
std::optional<std::string> strip_identity(std::string name, int times) {
  for (int i = 0; i < times; ++i) {
    if (name.size() < 4 || name.rfind("id(", 0) != 0 || name.back() != ')')
      return std::nullopt;
    name = name.substr(3, name.size() - 4);
  }
  return name;
}

int iterated_src(const GlobularData& g, int dim, int index, int k) {
  while (dim > k) index = g.src(dim--, index);
  return index;
}

int iterated_tgt(const GlobularData& g, int dim, int index, int k) {
  while (dim > k) index = g.tgt(dim--, index);
  return index;
}

}  // namespace

// CellSet -------------------------------------------------------------------

CellSet CellSet::empty(const FiniteOmegaCat& x) {
  CellSet s;
  int const d = x.trunc_dim();
  s.bits_.resize(static_cast<std::size_t>(std::max(d + 1, 1)));
  for (int n = 1; n <= d; ++n) s.bits_[n].assign(x.count(n), false);
  return s;
}

CellSet CellSet::full(const FiniteOmegaCat& x) {
  CellSet s = empty(x);
  for (int n = 1; n <= x.trunc_dim(); ++n) s.bits_[n].assign(x.count(n), true);
  return s;
}

bool CellSet::contains(Cell c) const {
  if (c.dim <= 0 || c.dim > trunc_dim()) return false;
  return bits_[c.dim][c.index];
}

void CellSet::insert(Cell c) {
  if (c.dim <= 0 || c.dim > trunc_dim())
    throw InvalidInput("cell sets hold cells of dimension 1..trunc_dim only");
  bits_[c.dim][c.index] = true;
}

void CellSet::erase(Cell c) {
  if (c.dim <= 0 || c.dim > trunc_dim()) return;
  bits_[c.dim][c.index] = false;
}

std::size_t CellSet::size(int dim) const {
  if (dim <= 0 || dim > trunc_dim()) return 0;
  return static_cast<std::size_t>(
      std::count(bits_[dim].begin(), bits_[dim].end(), true));
}

std::size_t CellSet::size() const {
  std::size_t total = 0;
  for (int n = 1; n <= trunc_dim(); ++n) total += size(n);
  return total;
}

bool CellSet::subset_of(const CellSet& other) const {
  for (int n = 1; n <= trunc_dim(); ++n)
    for (std::size_t i = 0; i < bits_[n].size(); ++i)
      if (bits_[n][i] && !other.contains({n, static_cast<int>(i)}))
        return false;
  return true;
}

std::vector<Cell> CellSet::members() const {
  std::vector<Cell> out;
  for (int n = 1; n <= trunc_dim(); ++n)
    for (std::size_t i = 0; i < bits_[n].size(); ++i)
      if (bits_[n][i]) out.push_back({n, static_cast<int>(i)});
  return out;
}

// FiniteOmegaCat ------------------------------------------------------------

void FiniteOmegaCat::set_marking(CellSet marking) {
  if (marking.trunc_dim() != std::max(trunc_dim(), 0))
    throw InvalidInput("marking does not match the category's truncation");
  marking_ = std::move(marking);
}

std::size_t FiniteOmegaCat::count(int dim) const {
  int const d = trunc_dim();
  if (dim < 0 || d < 0) return 0;
  return cells_.count(std::min(dim, d));
}

std::vector<Cell> FiniteOmegaCat::cells(int dim) const {
  std::vector<Cell> out;
  auto const n = static_cast<int>(count(dim));
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back({dim, i});
  return out;
}

std::string FiniteOmegaCat::name(Cell c) const {
  int const d = trunc_dim();
  if (c.dim <= d) return cells_.name(c.dim, c.index);
  return identity_name(cells_.name(d, c.index), c.dim - d);
}

std::optional<Cell> FiniteOmegaCat::find(int dim,
                                         const std::string& name) const {
  int const d = trunc_dim();
  if (dim < 0 || d < 0) return std::nullopt;
  if (dim <= d) {
    auto i = cells_.find(dim, name);
    if (!i) return std::nullopt;
    return Cell{dim, *i};
  }
  auto base = strip_identity(name, dim - d);
  if (!base) return std::nullopt;
  auto i = cells_.find(d, *base);
  if (!i) return std::nullopt;
  return Cell{dim, *i};
}

Cell FiniteOmegaCat::cell(int dim, const std::string& name) const {
  auto c = find(dim, name);
  if (!c)
    throw InvalidInput("unknown cell '" + name + "' in dimension " +
                       std::to_string(dim));
  return *c;
}

Cell FiniteOmegaCat::src(Cell c) const {
  if (c.dim <= 0) throw InvalidInput("0-cells have no source");
  if (c.dim <= trunc_dim()) return {c.dim - 1, cells_.src(c.dim, c.index)};
  return {c.dim - 1, c.index};
}

Cell FiniteOmegaCat::tgt(Cell c) const {
  if (c.dim <= 0) throw InvalidInput("0-cells have no target");
  if (c.dim <= trunc_dim()) return {c.dim - 1, cells_.tgt(c.dim, c.index)};
  return {c.dim - 1, c.index};
}

Cell FiniteOmegaCat::src(Cell c, int k) const {
  while (c.dim > k) c = src(c);
  return c;
}

Cell FiniteOmegaCat::tgt(Cell c, int k) const {
  while (c.dim > k) c = tgt(c);
  return c;
}

bool FiniteOmegaCat::parallel(Cell a, Cell b) const {
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  return src(a) == src(b) && tgt(a) == tgt(b);
}

Cell FiniteOmegaCat::identity(Cell c) const {
  if (c.dim < trunc_dim()) return {c.dim + 1, id_[c.dim][c.index]};
  return {c.dim + 1, c.index};
}

Cell FiniteOmegaCat::lift(Cell c, int dim) const {
  while (c.dim < dim) c = identity(c);
  return c;
}

bool FiniteOmegaCat::is_identity(Cell c) const {
  if (c.dim == 0) return false;
  if (c.dim > trunc_dim()) return true;
  return identity(src(c)) == c;
}

int FiniteOmegaCat::table_entry(int k, int dim, int a, int b) const {
  auto it = comp_.find({k, dim});
  if (it == comp_.end()) return kMissing;
  auto const n = cells_.count(dim);
  return it->second[static_cast<std::size_t>(a) * n +
                    static_cast<std::size_t>(b)];
}

int FiniteOmegaCat::identity_entry(int dim, int index) const {
  if (dim < 0 || dim >= static_cast<int>(id_.size())) return kMissing;
  return id_[dim][index];
}

std::optional<Cell> FiniteOmegaCat::try_compose(int k, Cell a, Cell b) const {
  if (a.dim != b.dim || k < 0 || k >= a.dim)
    throw InvalidInput("composition along " + std::to_string(k) +
                       " needs two cells of one dimension above it");
  if (tgt(a, k) != src(b, k)) return std::nullopt;
  int const d = trunc_dim();
  if (a.dim <= d) {
    int const r = table_entry(k, a.dim, a.index, b.index);
    if (r == kMissing)
      throw InvalidInput("composition table has no entry for " + name(a) +
                         " o" + std::to_string(k) + " " + name(b));
    return Cell{a.dim, r};
  }
  if (k >= d) return a;  // both are lifts of one top cell
  Cell r = compose(k, Cell{d, a.index}, Cell{d, b.index});
  return lift(r, a.dim);
}

Cell FiniteOmegaCat::compose(int k, Cell a, Cell b) const {
  auto r = try_compose(k, a, b);
  if (!r)
    throw InvalidInput("cells " + name(a) + " and " + name(b) +
                       " are not composable along " + std::to_string(k));
  return *r;
}

Cell FiniteOmegaCat::whisker(int k, Cell a, Cell b) const {
  int const n = std::max(a.dim, b.dim);
  return compose(k, lift(a, n), lift(b, n));
}

std::vector<Cell> FiniteOmegaCat::cells_between(Cell a, Cell b) const {
  std::vector<Cell> out;
  int const n = a.dim + 1;
  if (n <= trunc_dim()) {
    auto const& index = by_boundary_[n];
    auto it = index.find({a.index, b.index});
    if (it != index.end())
      for (int i : it->second) out.push_back({n, i});
    return out;
  }
  if (a == b) out.push_back(identity(a));
  return out;
}

void FiniteOmegaCat::rebuild_index() {
  int const d = trunc_dim();
  by_boundary_.assign(static_cast<std::size_t>(std::max(d + 1, 0)), {});
  for (int n = 1; n <= d; ++n)
    for (int i = 0; i < static_cast<int>(cells_.count(n)); ++i)
      by_boundary_[n][{cells_.src(n, i), cells_.tgt(n, i)}].push_back(i);
}

// CategoryBuilder -----------------------------------------------------------

CategoryBuilder::CategoryBuilder(int trunc_dim) : cells_(trunc_dim) {
  id_.resize(static_cast<std::size_t>(std::max(trunc_dim, 0)));
}

CategoryBuilder::CategoryBuilder(const FiniteOmegaCat& base)
    : cells_(base.underlying()) {
  int const d = base.trunc_dim();
  id_.resize(static_cast<std::size_t>(std::max(d, 0)));
  for (int n = 0; n < d; ++n)
    for (int i = 0; i < static_cast<int>(base.count(n)); ++i)
      set_identity(n, i, base.identity_entry(n, i));
  for (auto const& [key, table] : base.tables()) {
    auto const count = cells_.count(key.second);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b) {
        int const r = table[a * count + b];
        if (r != kMissing)
          comp_[key][{static_cast<int>(a), static_cast<int>(b)}] = r;
      }
  }
  for (Cell c : base.marking().members())
    marks_.emplace_back(c.dim, base.name(c));
}

void CategoryBuilder::extend_to(int trunc_dim) {
  cells_.extend_to(trunc_dim);
  id_.resize(static_cast<std::size_t>(std::max(trunc_dim, 0)));
}

int CategoryBuilder::index(int dim, const std::string& name) const {
  auto i = cells_.find(dim, name);
  if (!i)
    throw InvalidInput("unknown cell '" + name + "' in dimension " +
                       std::to_string(dim));
  return *i;
}

int CategoryBuilder::add_cell(int dim, std::string name, const std::string& src,
                              const std::string& tgt) {
  if (dim == 0) return cells_.add_cell(0, std::move(name));
  return cells_.add_cell(dim, std::move(name), index(dim - 1, src),
                         index(dim - 1, tgt));
}

void CategoryBuilder::set_identity(int dim, int cell, int id) {
  if (dim < 0 || dim >= static_cast<int>(id_.size()))
    throw InvalidInput("identity of a top-dimensional cell is formal");
  auto& level = id_[dim];
  if (level.size() <= static_cast<std::size_t>(cell))
    level.resize(static_cast<std::size_t>(cell) + 1, kMissing);
  level[cell] = id;
}

void CategoryBuilder::set_identity(int dim, const std::string& cell,
                                   const std::string& id) {
  set_identity(dim, index(dim, cell), index(dim + 1, id));
}

void CategoryBuilder::set_comp(int k, int dim, int a, int b, int result) {
  if (k < 0 || k >= dim || dim > trunc_dim())
    throw InvalidInput("composition table (" + std::to_string(k) + "," +
                       std::to_string(dim) + ") is out of range");
  comp_[{k, dim}][{a, b}] = result;
}

void CategoryBuilder::set_comp(int k, int dim, const std::string& a,
                               const std::string& b,
                               const std::string& result) {
  set_comp(k, dim, index(dim, a), index(dim, b), index(dim, result));
}

void CategoryBuilder::mark(int dim, const std::string& cell) {
  if (dim <= 0) throw InvalidInput("0-cells cannot be marked");
  marks_.emplace_back(dim, cell);
}

FiniteOmegaCat CategoryBuilder::build() const {
  FiniteOmegaCat x;
  x.cells_ = cells_;
  int const d = cells_.trunc_dim();
  x.id_.resize(static_cast<std::size_t>(std::max(d, 0)));
  for (int n = 0; n < d; ++n) {
    x.id_[n].assign(cells_.count(n), kMissing);
    for (std::size_t i = 0; i < id_[n].size() && i < cells_.count(n); ++i)
      x.id_[n][i] = id_[n][i];
  }
  for (int n = 1; n <= d; ++n) {
    auto const count = cells_.count(n);
    for (int k = 0; k < n; ++k) {
      auto& table = x.comp_[{k, n}];
      table.assign(count * count, kMissing);
      auto it = comp_.find({k, n});
      if (it == comp_.end()) continue;
      for (auto const& [pair, r] : it->second)
        table[static_cast<std::size_t>(pair.first) * count +
              static_cast<std::size_t>(pair.second)] = r;
    }
  }
  x.rebuild_index();
  x.marking_ = CellSet::empty(x);
  for (auto const& [dim, name] : marks_) x.marking_.insert(x.cell(dim, name));
  return x;
}

// Validation ----------------------------------------------------------------

ValidationReport validate_category(const FiniteOmegaCat& x,
                                   AxiomOptions options) {
  ValidationReport report = validate_globular(x.underlying());
  if (!report.ok()) return report;
  int const d = x.trunc_dim();
  for (int n = 0; n <= d; ++n)
    if (x.count(n) > options.max_cells_per_dim)
      throw BudgetExceeded("dimension " + std::to_string(n) + " has " +
                           std::to_string(x.count(n)) +
                           " cells, above the axiom-check budget");
  auto nm = [&](Cell c) { return x.name(c); };

  for (int n = 0; n < d; ++n)
    for (Cell c : x.cells(n)) {
      int const id = x.identity_entry(n, c.index);
      if (id == kMissing || id >= static_cast<int>(x.count(n + 1))) {
        report.add("identity-missing", n, {nm(c)});
        continue;
      }
      Cell i{n + 1, id};
      if (x.src(i) != c || x.tgt(i) != c)
        report.add("identity-typing", n, {nm(c), nm(i)},
                   "identity is not an endo-cell on its argument");
    }
  if (!report.ok()) return report;

  for (int n = 1; n <= d; ++n)
    for (int k = 0; k < n; ++k)
      for (Cell a : x.cells(n))
        for (Cell b : x.cells(n)) {
          bool const compatible = x.tgt(a, k) == x.src(b, k);
          int const r = x.table_entry(k, n, a.index, b.index);
          if (compatible && r == kMissing) {
            report.add("composition-missing", n, {nm(a), nm(b)},
                       "along " + std::to_string(k));
            continue;
          }
          if (!compatible && r != kMissing) {
            report.add("composition-on-incompatible-pair", n, {nm(a), nm(b)},
                       "along " + std::to_string(k));
            continue;
          }
          if (r == kMissing) continue;
          if (r < 0 || r >= static_cast<int>(x.count(n))) {
            report.add("composition-reference", n, {nm(a), nm(b)});
            continue;
          }
          Cell res{n, r};
          bool typed = true;
          if (k == n - 1) {
            typed = x.src(res) == x.src(a) && x.tgt(res) == x.tgt(b);
          } else {
            int const s = x.table_entry(k, n - 1, x.src(a).index,
                                        x.src(b).index);
            int const t = x.table_entry(k, n - 1, x.tgt(a).index,
                                        x.tgt(b).index);
            typed = s != kMissing && t != kMissing &&
                    x.src(res) == Cell{n - 1, s} &&
                    x.tgt(res) == Cell{n - 1, t};
          }
          if (!typed)
            report.add("composition-typing", n, {nm(a), nm(b), nm(res)},
                       "along " + std::to_string(k));
        }
  if (!report.ok()) return report;

  for (int n = 1; n <= d; ++n)
    for (Cell a : x.cells(n))
      for (int k = 0; k < n; ++k) {
        Cell const left = x.lift(x.src(a, k), n);
        Cell const right = x.lift(x.tgt(a, k), n);
        if (x.compose(k, left, a) != a)
          report.add("unit-left", n, {nm(a)}, "along " + std::to_string(k));
        if (x.compose(k, a, right) != a)
          report.add("unit-right", n, {nm(a)}, "along " + std::to_string(k));
      }

  for (int n = 1; n <= d; ++n)
    for (int k = 0; k < n; ++k)
      for (Cell a : x.cells(n))
        for (Cell b : x.cells(n)) {
          auto ab = x.try_compose(k, a, b);
          if (!ab) continue;
          for (Cell c : x.cells(n)) {
            auto abc = x.try_compose(k, *ab, c);
            if (!abc) continue;
            Cell const bc = x.compose(k, b, c);
            if (x.compose(k, a, bc) != *abc)
              report.add("associativity", n, {nm(a), nm(b), nm(c)},
                         "along " + std::to_string(k));
          }
        }

  for (int n = 2; n <= d; ++n)
    for (int l = 1; l < n; ++l) {
      std::vector<std::pair<Cell, Cell>> pairs;
      for (Cell a : x.cells(n))
        for (Cell b : x.cells(n))
          if (x.try_compose(l, a, b)) pairs.emplace_back(a, b);
      for (int k = 0; k < l; ++k)
        for (auto const& [a, b] : pairs)
          for (auto const& [c, e] : pairs) {
            auto lhs = x.try_compose(k, x.compose(l, a, b), x.compose(l, c, e));
            if (!lhs) continue;
            auto ac = x.try_compose(k, a, c);
            auto be = x.try_compose(k, b, e);
            std::optional<Cell> rhs;
            if (ac && be) rhs = x.try_compose(l, *ac, *be);
            if (!rhs || *rhs != *lhs)
              report.add("interchange", n, {nm(a), nm(b), nm(c), nm(e)},
                         "along " + std::to_string(k) + " and " +
                             std::to_string(l));
          }
    }

  for (int n = 1; n < d; ++n)
    for (int k = 0; k < n; ++k)
      for (Cell a : x.cells(n))
        for (Cell b : x.cells(n)) {
          auto ab = x.try_compose(k, a, b);
          if (!ab) continue;
          if (x.identity(*ab) !=
              x.compose(k, x.identity(a), x.identity(b)))
            report.add("identity-functoriality", n, {nm(a), nm(b)},
                       "along " + std::to_string(k));
        }
  return report;
}

// Builders ------------------------------------------------------------------

namespace {

// Fills every boundary-compatible composition slot from a rule on names.
using CompositionRule = std::function<std::string(
    int k, int dim, const std::string& a, const std::string& b)>;

void fill_compositions(CategoryBuilder& builder, const CompositionRule& rule) {
  auto const& g = builder.cells();
  for (int n = 1; n <= g.trunc_dim(); ++n)
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < static_cast<int>(g.count(n)); ++a)
        for (int b = 0; b < static_cast<int>(g.count(n)); ++b) {
          if (iterated_tgt(g, n, a, k) != iterated_src(g, n, b, k)) continue;
          builder.set_comp(k, n, a, b,
                           builder.index(n, rule(k, n, g.name(n, a),
                                                 g.name(n, b))));
        }
}

struct ArrowSpec {
  std::string name, src, tgt;
};

// A 1-truncated category from objects, non-identity arrows, and a rule for
// composing non-identity arrows (diagrammatic order).
FiniteOmegaCat one_category(
    const std::vector<std::string>& objects,
    const std::vector<ArrowSpec>& arrows,
    const std::function<std::string(const std::string&, const std::string&)>&
        compose) {
  CategoryBuilder b(1);
  for (auto const& o : objects) b.add_cell(0, o);
  std::vector<std::string> ids;
  for (auto const& o : objects) {
    ids.push_back(identity_name(o, 1));
    b.add_cell(1, ids.back(), o, o);
    b.set_identity(0, o, ids.back());
  }
  for (auto const& a : arrows) b.add_cell(1, a.name, a.src, a.tgt);
  auto is_id = [&](const std::string& n) {
    return std::find(ids.begin(), ids.end(), n) != ids.end();
  };
  fill_compositions(b, [&](int, int, const std::string& a,
                           const std::string& c) -> std::string {
    if (is_id(a)) return c;
    if (is_id(c)) return a;
    return compose(a, c);
  });
  return b.build();
}

}  // namespace

FiniteOmegaCat free_on_discrete_shape(const GlobularData& shape,
                                      int trunc_dim) {
  if (shape.trunc_dim() > trunc_dim)
    throw InvalidInput("shape exceeds the requested truncation");
  CategoryBuilder b(trunc_dim);
  // base_dim[n][i]: dimension of the generator cell i is an identity on
  std::vector<std::vector<int>> base_dim(static_cast<std::size_t>(trunc_dim + 1));
  for (int n = 0; n <= trunc_dim; ++n) {
    for (int i = 0; i < static_cast<int>(shape.count(n)); ++i) {
      if (n == 0)
        b.add_cell(0, shape.name(0, i));
      else
        b.add_cell(n, shape.name(n, i), shape.name(n - 1, shape.src(n, i)),
                   shape.name(n - 1, shape.tgt(n, i)));
      base_dim[n].push_back(n);
    }
    if (n == 0) continue;
    auto const below = b.cells().count(n - 1);
    for (int i = 0; i < static_cast<int>(below); ++i) {
      std::string const base = b.cells().name(n - 1, i);
      int const idx = b.add_cell(n, identity_name(base, 1), base, base);
      b.set_identity(n - 1, i, idx);
      base_dim[n].push_back(base_dim[n - 1][i]);
    }
  }
  auto const& g = b.cells();
  for (int n = 1; n <= trunc_dim; ++n)
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < static_cast<int>(g.count(n)); ++a)
        for (int c = 0; c < static_cast<int>(g.count(n)); ++c) {
          if (iterated_tgt(g, n, a, k) != iterated_src(g, n, c, k)) continue;
          if (base_dim[n][a] <= k)
            b.set_comp(k, n, a, c, c);
          else if (base_dim[n][c] <= k)
            b.set_comp(k, n, a, c, a);
          else
            throw InvalidInput("shape has composable non-identity cells");
        }
  return b.build();
}

FiniteOmegaCat globe_cat(int n, int trunc_dim) {
  if (trunc_dim < n) throw InvalidInput("globe_cat needs trunc_dim >= n");
  return free_on_discrete_shape(globe(n), trunc_dim);
}

FiniteOmegaCat boundary_globe_cat(int n, int trunc_dim) {
  if (trunc_dim < n - 1)
    throw InvalidInput("boundary_globe_cat needs trunc_dim >= n - 1");
  return free_on_discrete_shape(boundary_globe(n), trunc_dim);
}

FiniteOmegaCat terminal(int trunc_dim) {
  GlobularData point(0);
  point.add_cell(0, "*");
  return free_on_discrete_shape(point, trunc_dim);
}

FiniteOmegaCat walking_iso() {
  return one_category({"x", "y"}, {{"u", "x", "y"}, {"v", "y", "x"}},
                      [](const std::string& a, const std::string&) {
                        return a == "u" ? "id(x)" : "id(y)";
                      });
}

FiniteOmegaCat flat_demo() {
  std::map<std::pair<std::string, std::string>, std::string> table = {
      {{"u", "v"}, "e"}, {{"u", "w"}, "e"}, {{"v", "u"}, "f"},
      {{"w", "u"}, "f"}, {{"e", "e"}, "e"}, {{"f", "f"}, "f"},
      {{"e", "u"}, "u"}, {{"u", "f"}, "u"}, {{"v", "e"}, "v"},
      {{"w", "e"}, "v"}, {{"f", "v"}, "v"}, {{"f", "w"}, "v"}};
  auto base = one_category(
      {"x", "y"},
      {{"u", "x", "y"},
       {"v", "y", "x"},
       {"w", "y", "x"},
       {"e", "x", "x"},
       {"f", "y", "y"}},
      [&](const std::string& a, const std::string& b) {
        auto it = table.find({a, b});
        if (it == table.end())
          throw InvalidInput("flat_demo table is missing " + a + ";" + b);
        return it->second;
      });
  return codiscrete_top(base);
}

FiniteOmegaCat monoid_category(const std::vector<std::vector<int>>& table,
                               const std::vector<std::string>& names) {
  auto const size = table.size();
  if (size == 0) throw InvalidInput("a monoid has at least its unit");
  std::vector<std::string> label(size);
  label[0] = identity_name("*", 1);
  for (std::size_t i = 1; i < size; ++i)
    label[i] = i < names.size() && !names[i].empty() ? names[i]
                                                     : "m" + std::to_string(i);
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 1; i < size; ++i) {
    arrows.push_back({label[i], "*", "*"});
    position[label[i]] = i;
  }
  return one_category({"*"}, arrows,
                      [&](const std::string& a, const std::string& b) {
                        return label[static_cast<std::size_t>(
                            table[position.at(a)][position.at(b)])];
                      });
}

FiniteOmegaCat preorder_category(const std::vector<std::vector<bool>>& le) {
  auto const n = le.size();
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("o" + std::to_string(i));
  std::vector<ArrowSpec> arrows;
  auto arrow = [&](std::size_t i, std::size_t j) {
    return i == j ? identity_name(objects[i], 1)
                  : "a" + std::to_string(i) + "_" + std::to_string(j);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j]) arrows.push_back({arrow(i, j), objects[i], objects[j]});
  return one_category(objects, arrows,
                      [&](const std::string& a, const std::string& b) {
                        // a = a<i>_<j>, b = a<j>_<l>
                        auto us = a.find('_');
                        auto ub = b.find('_');
                        auto i = std::stoul(a.substr(1, us - 1));
                        auto l = std::stoul(b.substr(ub + 1));
                        if (!le[i][l])
                          throw InvalidInput("preorder is not transitive");
                        return arrow(i, l);
                      });
}

FiniteOmegaCat raise_truncation(const FiniteOmegaCat& x, int trunc_dim) {
  if (trunc_dim < x.trunc_dim())
    throw InvalidInput("raise_truncation cannot lower the truncation");
  FiniteOmegaCat current = x;
  while (current.trunc_dim() < trunc_dim) {
    int const d = current.trunc_dim();
    CategoryBuilder b(current);
    b.extend_to(d + 1);
    for (Cell c : current.cells(d)) {
      int const idx = b.add_cell(d + 1, current.name(current.identity(c)),
                                 current.name(c), current.name(c));
      b.set_identity(d, c.index, idx);
    }
    // Top cells of the new level are indexed like the old top level.
    for (int k = 0; k <= d; ++k)
      for (Cell a : current.cells(d))
        for (Cell c : current.cells(d)) {
          if (k == d) {
            if (a == c) b.set_comp(k, d + 1, a.index, a.index, a.index);
            continue;
          }
          auto r = current.try_compose(k, a, c);
          if (r) b.set_comp(k, d + 1, a.index, c.index, r->index);
        }
    current = b.build();
  }
  return current;
}

FiniteOmegaCat codiscrete_top(const FiniteOmegaCat& x) {
  int const d = x.trunc_dim();
  CategoryBuilder b(x);
  b.extend_to(d + 1);
  std::map<std::pair<int, int>, int> pair_index;
  auto pair_name = [&](Cell a, Cell c) {
    return a == c ? x.name(x.identity(a))
                  : "(" + x.name(a) + "=>" + x.name(c) + ")";
  };
  for (Cell a : x.cells(d))
    for (Cell c : x.cells(d))
      if (x.parallel(a, c))
        pair_index[{a.index, c.index}] =
            b.add_cell(d + 1, pair_name(a, c), x.name(a), x.name(c));
  for (Cell a : x.cells(d))
    b.set_identity(d, a.index, pair_index.at({a.index, a.index}));
  for (auto const& [p, i] : pair_index)
    for (auto const& [q, j] : pair_index) {
      for (int k = 0; k < d; ++k) {
        auto s = x.try_compose(k, Cell{d, p.first}, Cell{d, q.first});
        if (!s) continue;
        Cell t = x.compose(k, Cell{d, p.second}, Cell{d, q.second});
        b.set_comp(k, d + 1, i, j, pair_index.at({s->index, t.index}));
      }
      if (p.second == q.first)
        b.set_comp(d, d + 1, i, j, pair_index.at({p.first, q.second}));
    }
  return b.build();
}

FiniteOmegaCat cosep(int k, int trunc_dim) {
  if (k < 1) throw InvalidInput("cosep needs k >= 1");
  if (trunc_dim < k) throw InvalidInput("cosep needs trunc_dim >= k");
  CategoryBuilder b(trunc_dim);
  auto const star = std::string("*");
  auto const w = std::string("w");
  auto pair = [](const std::string& a, const std::string& c) {
    return "(" + a + "," + c + ")";
  };
  std::vector<std::pair<std::string, std::string>> pairs = {
      {w, w}, {w, star}, {star, w}, {star, star}};
  for (int l = 0; l <= trunc_dim; ++l) {
    if (l < k) {
      if (l == 0)
        b.add_cell(0, star);
      else
        b.add_cell(l, star, star, star);
    } else if (l == k) {
      b.add_cell(l, w, star, star);
      b.add_cell(l, star, star, star);
    } else {
      for (auto const& [a, c] : pairs) {
        if (l == k + 1)
          b.add_cell(l, pair(a, c), a, c);
        else
          b.add_cell(l, pair(a, c), pair(a, c), pair(a, c));
      }
    }
  }
  for (int l = 0; l < trunc_dim; ++l) {
    if (l < k) {
      b.set_identity(l, star, star);
    } else if (l == k) {
      b.set_identity(l, w, pair(w, w));
      b.set_identity(l, star, pair(star, star));
    } else {
      for (auto const& [a, c] : pairs) b.set_identity(l, pair(a, c), pair(a, c));
    }
  }
  auto split = [](const std::string& p) {
    auto comma = p.find(',');
    return std::pair{p.substr(1, comma - 1), p.substr(comma + 1, p.size() - comma - 2)};
  };
  auto low = [&](const std::string& a, const std::string& c) {
    return a == star && c == star ? star : w;
  };
  fill_compositions(b, [&](int j, int l, const std::string& a,
                           const std::string& c) -> std::string {
    if (l < k) return star;
    if (l == k) return low(a, c);
    auto [a1, a2] = split(a);
    auto [c1, c2] = split(c);
    if (j < k) return pair(low(a1, c1), low(a2, c2));
    if (j == k) return pair(a1, c2);
    return a;
  });
  return b.build();
}

FiniteOmegaCat disjoint_union(const FiniteOmegaCat& a,
                              const FiniteOmegaCat& b) {
  int const d = std::max(a.trunc_dim(), b.trunc_dim());
  FiniteOmegaCat left = raise_truncation(a, d);
  FiniteOmegaCat right = raise_truncation(b, d);
  CategoryBuilder out(left);
  std::vector<std::vector<int>> rename(static_cast<std::size_t>(d + 1));
  for (int n = 0; n <= d; ++n)
    for (Cell c : right.cells(n)) {
      std::string name = right.name(c);
      while (out.cells().find(n, name)) name += "'";
      int idx;
      if (n == 0) {
        idx = out.add_cell(0, name);
      } else {
        idx = out.add_cell(
            n, name, out.cells().name(n - 1, rename[n - 1][right.src(c).index]),
            out.cells().name(n - 1, rename[n - 1][right.tgt(c).index]));
      }
      rename[n].push_back(idx);
    }
  for (int n = 0; n < d; ++n)
    for (Cell c : right.cells(n))
      out.set_identity(n, rename[n][c.index],
                       rename[n + 1][right.identity(c).index]);
  for (int n = 1; n <= d; ++n)
    for (int k = 0; k < n; ++k)
      for (Cell p : right.cells(n))
        for (Cell q : right.cells(n)) {
          int const r = right.table_entry(k, n, p.index, q.index);
          if (r != kMissing)
            out.set_comp(k, n, rename[n][p.index], rename[n][q.index],
                         rename[n][r]);
        }
  FiniteOmegaCat result = out.build();
  CellSet marking = CellSet::empty(result);
  for (Cell c : left.marking().members()) marking.insert(c);
  for (Cell c : right.marking().members())
    marking.insert({c.dim, rename[c.dim][c.index]});
  result.set_marking(marking);
  return result;
}

// Hom and suspension --------------------------------------------------------

Cell HomCategory::to_parent(Cell c) const {
  int const d = cat.trunc_dim();
  if (c.dim <= d) return {c.dim + 1, parent[c.dim][c.index]};
  return {c.dim + 1, parent[d][c.index]};
}

std::optional<Cell> HomCategory::from_parent(Cell c) const {
  if (c.dim < 1) return std::nullopt;
  int const d = cat.trunc_dim();
  int const level = std::min(c.dim - 1, d);
  if (level < 0) return std::nullopt;
  int const i = child[level][c.index];
  if (i == kMissing) return std::nullopt;
  return Cell{c.dim - 1, i};
}

HomCategory hom(const FiniteOmegaCat& x, Cell from, Cell to) {
  int const d = x.trunc_dim();
  if (d < 1) throw InvalidInput("hom needs a category truncated at >= 1");
  if (from.dim != 0 || to.dim != 0)
    throw InvalidInput("hom takes a pair of 0-cells");
  HomCategory h;
  h.from = from;
  h.to = to;
  h.parent.resize(static_cast<std::size_t>(d));
  h.child.resize(static_cast<std::size_t>(d));
  CategoryBuilder b(d - 1);
  for (int n = 0; n < d; ++n) {
    h.child[n].assign(x.count(n + 1), kMissing);
    for (Cell c : x.cells(n + 1)) {
      if (x.src(c, 0) != from || x.tgt(c, 0) != to) continue;
      int idx;
      if (n == 0)
        idx = b.add_cell(0, x.name(c));
      else
        idx = b.add_cell(n, x.name(c), x.name(x.src(c)), x.name(x.tgt(c)));
      h.parent[n].push_back(c.index);
      h.child[n][c.index] = idx;
    }
  }
  for (int n = 0; n + 1 < d; ++n)
    for (std::size_t i = 0; i < h.parent[n].size(); ++i) {
      Cell const id = x.identity(Cell{n + 1, h.parent[n][i]});
      b.set_identity(n, static_cast<int>(i), h.child[n + 1][id.index]);
    }
  for (int n = 1; n < d; ++n)
    for (int k = 0; k < n; ++k)
      for (std::size_t i = 0; i < h.parent[n].size(); ++i)
        for (std::size_t j = 0; j < h.parent[n].size(); ++j) {
          int const r =
              x.table_entry(k + 1, n + 1, h.parent[n][i], h.parent[n][j]);
          if (r != kMissing)
            b.set_comp(k, n, static_cast<int>(i), static_cast<int>(j),
                       h.child[n][r]);
        }
  h.cat = b.build();
  CellSet marking = CellSet::empty(h.cat);
  for (Cell c : x.marking().members())
    if (c.dim >= 2)
      if (auto hc = h.from_parent(c)) marking.insert(*hc);
  h.cat.set_marking(marking);
  return h;
}

FiniteOmegaCat hom(const FiniteOmegaCat& x, const std::string& from,
                   const std::string& to) {
  return hom(x, x.cell(0, from), x.cell(0, to)).cat;
}

FiniteOmegaCat suspend(const FiniteOmegaCat& x) {
  int const d = x.trunc_dim();
  CategoryBuilder b(d + 1);
  std::string const star = kSuspensionSource;
  std::string const star2 = kSuspensionTarget;
  b.add_cell(0, star);
  b.add_cell(0, star2);
  // names[n][i]: name in the suspension of X's (n-1)-cell i
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(d + 2));
  std::vector<std::string> star_id(static_cast<std::size_t>(d + 2));
  std::vector<std::string> star2_id(static_cast<std::size_t>(d + 2));
  star_id[0] = star;
  star2_id[0] = star2;
  for (int n = 1; n <= d + 1; ++n) {
    star_id[n] = identity_name(star, n);
    star2_id[n] = identity_name(star2, n);
    for (Cell c : x.cells(n - 1)) {
      std::string name = x.name(c);
      while (name == star_id[n] || name == star2_id[n]) name += "'";
      names[n].push_back(name);
      if (n == 1)
        b.add_cell(1, name, star, star2);
      else
        b.add_cell(n, name, names[n - 1][x.src(c).index],
                   names[n - 1][x.tgt(c).index]);
    }
    b.add_cell(n, star_id[n], star_id[n - 1], star_id[n - 1]);
    b.add_cell(n, star2_id[n], star2_id[n - 1], star2_id[n - 1]);
    b.set_identity(n - 1, star_id[n - 1], star_id[n]);
    b.set_identity(n - 1, star2_id[n - 1], star2_id[n]);
  }
  for (int n = 1; n <= d; ++n)
    for (Cell c : x.cells(n - 1))
      b.set_identity(n, names[n][c.index], names[n + 1][x.identity(c).index]);
  for (int n = 1; n <= d + 1; ++n) {
    for (int k = 0; k < n; ++k) {
      b.set_comp(k, n, star_id[n], star_id[n], star_id[n]);
      b.set_comp(k, n, star2_id[n], star2_id[n], star2_id[n]);
      if (k == 0) {
        for (Cell c : x.cells(n - 1)) {
          b.set_comp(0, n, star_id[n], names[n][c.index], names[n][c.index]);
          b.set_comp(0, n, names[n][c.index], star2_id[n], names[n][c.index]);
        }
        continue;
      }
      for (Cell p : x.cells(n - 1))
        for (Cell q : x.cells(n - 1)) {
          auto r = x.try_compose(k - 1, p, q);
          if (r)
            b.set_comp(k, n, names[n][p.index], names[n][q.index],
                       names[n][r->index]);
        }
    }
  }
  for (Cell c : x.marking().members()) b.mark(c.dim + 1, names[c.dim + 1][c.index]);
  return b.build();
}

// Isomorphism search --------------------------------------------------------

namespace {

struct IsoSearch {
  const FiniteOmegaCat& a;
  const FiniteOmegaCat& b;
  GradedMap map;
  std::vector<std::vector<bool>> used;

  bool dimension_ok(int n) const {
    if (n > 0)
      for (Cell c : a.cells(n - 1)) {
        if (n - 1 >= a.trunc_dim()) break;
        Cell const img{n - 1, map(n - 1, c.index)};
        if (b.identity(img).index != map(n, a.identity(c).index)) return false;
      }
    for (int k = 0; k < n; ++k)
      for (Cell p : a.cells(n))
        for (Cell q : a.cells(n)) {
          auto r = a.try_compose(k, p, q);
          if (!r) continue;
          auto s = b.try_compose(k, Cell{n, map(n, p.index)},
                                 Cell{n, map(n, q.index)});
          if (!s || s->index != map(n, r->index)) return false;
        }
    return true;
  }

  bool run(int n, int i) {
    int const d = a.trunc_dim();
    if (n > d) return true;
    if (i == static_cast<int>(a.count(n))) {
      if (!dimension_ok(n)) return false;
      return run(n + 1, 0);
    }
    Cell const c{n, i};
    for (Cell t : b.cells(n)) {
      if (used[n][t.index]) continue;
      if (n > 0) {
        if (b.src(t).index != map(n - 1, a.src(c).index)) continue;
        if (b.tgt(t).index != map(n - 1, a.tgt(c).index)) continue;
      }
      used[n][t.index] = true;
      map.images[n][i] = t.index;
      if (run(n, i + 1)) return true;
      used[n][t.index] = false;
    }
    map.images[n][i] = kMissing;
    return false;
  }
};

}  // namespace

std::optional<GradedMap> find_isomorphism(const FiniteOmegaCat& a,
                                          const FiniteOmegaCat& b) {
  if (a.trunc_dim() != b.trunc_dim()) return std::nullopt;
  int const d = a.trunc_dim();
  for (int n = 0; n <= d; ++n)
    if (a.count(n) != b.count(n)) return std::nullopt;
  IsoSearch search{a, b, {}, {}};
  search.map.images.resize(static_cast<std::size_t>(std::max(d + 1, 0)));
  search.used.resize(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (int n = 0; n <= d; ++n) {
    search.map.images[n].assign(a.count(n), kMissing);
    search.used[n].assign(b.count(n), false);
  }
  if (!search.run(0, 0)) return std::nullopt;
  return search.map;
}

}  // namespace omega
