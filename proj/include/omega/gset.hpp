#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "omega/report.hpp"

namespace omega {

inline constexpr int kMissing = -1;

// A finite globular set truncated at `trunc_dim`. Cells are opaque names,
// unique within a dimension; boundaries are stored as indices into the
// dimension below. Nothing is stored above the truncation.
class GlobularData {
 public:
  GlobularData() = default;
  explicit GlobularData(int trunc_dim);

  int trunc_dim() const { return trunc_dim_; }
  std::size_t count(int dim) const;
  std::size_t total_cells() const;

  const std::string& name(int dim, int index) const {
    return names_[dim][index];
  }
  const std::vector<std::string>& names(int dim) const { return names_[dim]; }
  std::optional<int> find(int dim, const std::string& name) const;

  // Boundaries of a cell of dimension >= 1; kMissing when undeclared.
  int src(int dim, int index) const { return src_[dim][index]; }
  int tgt(int dim, int index) const { return tgt_[dim][index]; }

  // Appends a cell. `src`/`tgt` index the dimension below (ignored for dim 0).
  int add_cell(int dim, std::string name, int src = kMissing,
               int tgt = kMissing);
  void set_boundary(int dim, int index, int src, int tgt);

  // Raises the truncation without adding cells.
  void extend_to(int trunc_dim);

  friend bool operator==(const GlobularData&, const GlobularData&) = default;

 private:
  int trunc_dim_ = -1;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> src_;
  std::vector<std::vector<int>> tgt_;
  std::vector<std::unordered_map<std::string, int>> lookup_;
};

// Per-dimension functions between the cells of two globular sets.
struct GradedMap {
  std::vector<std::vector<int>> images;

  int operator()(int dim, int index) const { return images[dim][index]; }
};

ValidationReport validate_globular(const GlobularData& g);
bool commutes_with_boundaries(const GradedMap& f, const GlobularData& from,
                              const GlobularData& to);

// The representable n-globe: cells s<k>, t<k> for k < n and the top cell c.
GlobularData globe(int n);
// globe(n) without its top cell; trunc_dim n-1 (empty for n = 0).
GlobularData boundary_globe(int n);
GlobularData disjoint_union(const GlobularData& a, const GlobularData& b);

struct CountOptions {
  std::uint64_t node_budget = 50'000'000;
};

// Exact number of boundary-preserving graded maps `from` -> `to`.
std::uint64_t count_maps(const GlobularData& from, const GlobularData& to,
                         CountOptions options = {});

}  // namespace omega
