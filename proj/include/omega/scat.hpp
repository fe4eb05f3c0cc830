#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/gset.hpp"
#include "omega/report.hpp"

namespace omega {

// A cell reference. Cells above the truncation are formal iterated
// identities; for `dim > trunc_dim` the index names the top-dimensional cell
// they are lifted from.
struct Cell {
  int dim = 0;
  int index = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class FiniteOmegaCat;

// A graded subset of positive-dimensional cells, dimensions 1..trunc_dim.
class CellSet {
 public:
  CellSet() = default;
  static CellSet empty(const FiniteOmegaCat& x);
  static CellSet full(const FiniteOmegaCat& x);

  int trunc_dim() const { return static_cast<int>(bits_.size()) - 1; }
  // Stored membership only; dimension 0 and dimensions above the
  // truncation report false.
  bool contains(Cell c) const;
  void insert(Cell c);
  void erase(Cell c);
  std::size_t size() const;
  std::size_t size(int dim) const;
  bool subset_of(const CellSet& other) const;
  std::vector<Cell> members() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<std::vector<bool>> bits_;  // bits_[0] is always empty
};

// A d-truncated strict omega-category given by explicit tables.
class FiniteOmegaCat {
 public:
  FiniteOmegaCat() = default;

  int trunc_dim() const { return cells_.trunc_dim(); }
  const GlobularData& underlying() const { return cells_; }
  const CellSet& marking() const { return marking_; }
  void set_marking(CellSet marking);

  // Number of cells in `dim`, counting formal identities above the top.
  std::size_t count(int dim) const;
  std::vector<Cell> cells(int dim) const;
  std::size_t total_cells() const { return cells_.total_cells(); }

  std::string name(Cell c) const;
  std::optional<Cell> find(int dim, const std::string& name) const;
  Cell cell(int dim, const std::string& name) const;  // throws if unknown

  Cell src(Cell c) const;
  Cell tgt(Cell c) const;
  // k-dimensional source / target, k <= c.dim.
  Cell src(Cell c, int k) const;
  Cell tgt(Cell c, int k) const;
  bool parallel(Cell a, Cell b) const;

  Cell identity(Cell c) const;
  Cell lift(Cell c, int dim) const;
  bool is_identity(Cell c) const;

  // a o_k b for cells of equal dimension, nullopt when t_k(a) != s_k(b).
  // Throws when the pair is compatible but the table has no entry.
  std::optional<Cell> try_compose(int k, Cell a, Cell b) const;
  Cell compose(int k, Cell a, Cell b) const;
  // Composition of cells of different dimensions; the lower one is
  // identity-lifted first.
  Cell whisker(int k, Cell a, Cell b) const;

  // Raw table access for validators: kMissing when no entry is stored.
  int table_entry(int k, int dim, int a, int b) const;
  int identity_entry(int dim, int index) const;
  const std::map<std::pair<int, int>, std::vector<int>>& tables() const {
    return comp_;
  }

  // All (n+1)-cells from a to b, for parallel n-cells.
  std::vector<Cell> cells_between(Cell a, Cell b) const;

 private:
  friend class CategoryBuilder;

  GlobularData cells_;
  std::vector<std::vector<int>> id_;  // id_[n][i] indexes dimension n+1
  std::map<std::pair<int, int>, std::vector<int>> comp_;  // (k, n) -> N*N
  CellSet marking_;
  // by_boundary_[n][(src, tgt)] lists the n-cells with that boundary
  std::vector<std::map<std::pair<int, int>, std::vector<int>>> by_boundary_;

  void rebuild_index();
};

// Name-based assembly of a FiniteOmegaCat.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(int trunc_dim);
  explicit CategoryBuilder(const FiniteOmegaCat& base);

  int trunc_dim() const { return cells_.trunc_dim(); }
  const GlobularData& cells() const { return cells_; }

  int add_cell(int dim, std::string name, const std::string& src = {},
               const std::string& tgt = {});
  void set_identity(int dim, const std::string& cell, const std::string& id);
  void set_comp(int k, int dim, const std::string& a, const std::string& b,
                const std::string& result);
  void set_comp(int k, int dim, int a, int b, int result);
  void set_identity(int dim, int cell, int id);
  void mark(int dim, const std::string& cell);
  // Raises the truncation without adding cells (identities must be supplied).
  void extend_to(int trunc_dim);

  int index(int dim, const std::string& name) const;

  FiniteOmegaCat build() const;

 private:
  GlobularData cells_;
  std::vector<std::vector<int>> id_;
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> comp_;
  std::vector<std::pair<int, std::string>> marks_;
};

struct AxiomOptions {
  std::size_t max_cells_per_dim = 64;
};

ValidationReport validate_category(const FiniteOmegaCat& x,
                                   AxiomOptions options = {});

// Builders ------------------------------------------------------------------

// Free strict omega-category on a globular set in which no two
// non-identity cells are composable, truncated at `trunc_dim`.
FiniteOmegaCat free_on_discrete_shape(const GlobularData& shape, int trunc_dim);
FiniteOmegaCat globe_cat(int n, int trunc_dim);
FiniteOmegaCat boundary_globe_cat(int n, int trunc_dim);
FiniteOmegaCat terminal(int trunc_dim);
// x, y; u: x -> y, v: y -> x with u o v = id(x), v o u = id(y).
FiniteOmegaCat walking_iso();
// 2-truncated: u: x -> y with a right inverse v and a distinct left inverse
// w, all composites related by unique (hence invertible) 2-cells.
FiniteOmegaCat flat_demo();
FiniteOmegaCat disjoint_union(const FiniteOmegaCat& a,
                              const FiniteOmegaCat& b);
// One-object category of a finite monoid given by its multiplication table
// (element 0 is the unit; table[a][b] = a then b).
FiniteOmegaCat monoid_category(const std::vector<std::vector<int>>& table,
                               const std::vector<std::string>& names = {});
// Thin category of a preorder; `le[i][j]` means an arrow i -> j.
FiniteOmegaCat preorder_category(const std::vector<std::vector<bool>>& le);
// Adds identity-only levels up to `trunc_dim`.
FiniteOmegaCat raise_truncation(const FiniteOmegaCat& x, int trunc_dim);
// Adds one level with exactly one cell between each parallel pair of top
// cells.
FiniteOmegaCat codiscrete_top(const FiniteOmegaCat& x);
FiniteOmegaCat cosep(int k, int trunc_dim);

// Structural operations -----------------------------------------------------

// Hom category X(x, y); (d-1)-truncated, cell names preserved.
struct HomCategory {
  FiniteOmegaCat cat;
  Cell from;
  Cell to;
  // parent[n][i]: index in X of the hom's n-cell i (an (n+1)-cell of X);
  // child is the inverse, kMissing outside the hom.
  std::vector<std::vector<int>> parent;
  std::vector<std::vector<int>> child;

  Cell to_parent(Cell c) const;
  std::optional<Cell> from_parent(Cell c) const;
};
HomCategory hom(const FiniteOmegaCat& x, Cell from, Cell to);
FiniteOmegaCat hom(const FiniteOmegaCat& x, const std::string& from,
                   const std::string& to);

inline constexpr const char* kSuspensionSource = "*";
inline constexpr const char* kSuspensionTarget = "*'";

// Suspension: two new 0-cells, every cell of X shifted up one dimension and
// directed from the first to the second; new cells keep X's names.
FiniteOmegaCat suspend(const FiniteOmegaCat& x);

// Isomorphism search by dimension-increasing backtracking; returns the cell
// bijection (per dimension, up to the truncation) when one exists.
std::optional<GradedMap> find_isomorphism(const FiniteOmegaCat& a,
                                          const FiniteOmegaCat& b);

}  // namespace omega
