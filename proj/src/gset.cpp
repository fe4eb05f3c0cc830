#include "omega/gset.hpp"

#include <algorithm>
#include <string>

#include "omega/error.hpp"

namespace omega {

GlobularData::GlobularData(int trunc_dim) { extend_to(trunc_dim); }

void GlobularData::extend_to(int trunc_dim) {
  if (trunc_dim < trunc_dim_)
    throw InvalidInput("cannot lower truncation of a globular set");
  trunc_dim_ = trunc_dim;
  auto const slots = static_cast<std::size_t>(trunc_dim + 1);
  names_.resize(slots);
  src_.resize(slots);
  tgt_.resize(slots);
  lookup_.resize(slots);
}

std::size_t GlobularData::count(int dim) const {
  if (dim < 0 || dim > trunc_dim_) return 0;
  return names_[dim].size();
}

std::size_t GlobularData::total_cells() const {
  std::size_t total = 0;
  for (auto const& level : names_) total += level.size();
  return total;
}

std::optional<int> GlobularData::find(int dim, const std::string& name) const {
  if (dim < 0 || dim > trunc_dim_) return std::nullopt;
  auto it = lookup_[dim].find(name);
  if (it == lookup_[dim].end()) return std::nullopt;
  return it->second;
}

int GlobularData::add_cell(int dim, std::string name, int src, int tgt) {
  if (dim < 0 || dim > trunc_dim_)
    throw InvalidInput("cell '" + name + "' has dimension " +
                       std::to_string(dim) + " outside 0.." +
                       std::to_string(trunc_dim_));
  if (lookup_[dim].count(name))
    throw InvalidInput("duplicate cell '" + name + "' in dimension " +
                       std::to_string(dim));
  auto const index = static_cast<int>(names_[dim].size());
  lookup_[dim].emplace(name, index);
  names_[dim].push_back(std::move(name));
  src_[dim].push_back(dim == 0 ? kMissing : src);
  tgt_[dim].push_back(dim == 0 ? kMissing : tgt);
  return index;
}

void GlobularData::set_boundary(int dim, int index, int src, int tgt) {
  src_[dim][index] = src;
  tgt_[dim][index] = tgt;
}

ValidationReport validate_globular(const GlobularData& g) {
  ValidationReport report;
  for (int n = 1; n <= g.trunc_dim(); ++n) {
    auto const below = static_cast<int>(g.count(n - 1));
    for (int i = 0; i < static_cast<int>(g.count(n)); ++i) {
      int const s = g.src(n, i);
      int const t = g.tgt(n, i);
      if (s < 0 || s >= below || t < 0 || t >= below) {
        report.add("boundary-reference", n, {g.name(n, i)},
                   "source or target is not a declared cell of dimension " +
                       std::to_string(n - 1));
        continue;
      }
      if (n < 2) continue;
      if (g.src(n - 1, s) != g.src(n - 1, t))
        report.add("globular-source", n, {g.name(n, i)},
                   "s(s(c)) differs from s(t(c))");
      if (g.tgt(n - 1, s) != g.tgt(n - 1, t))
        report.add("globular-target", n, {g.name(n, i)},
                   "t(s(c)) differs from t(t(c))");
    }
  }
  return report;
}

bool commutes_with_boundaries(const GradedMap& f, const GlobularData& from,
                              const GlobularData& to) {
  for (int n = 0; n <= from.trunc_dim(); ++n) {
    if (f.images.size() <= static_cast<std::size_t>(n)) return false;
    for (int i = 0; i < static_cast<int>(from.count(n)); ++i) {
      int const img = f(n, i);
      if (img < 0 || img >= static_cast<int>(to.count(n))) return false;
      if (n == 0) continue;
      if (to.src(n, img) != f(n - 1, from.src(n, i))) return false;
      if (to.tgt(n, img) != f(n - 1, from.tgt(n, i))) return false;
    }
  }
  return true;
}

GlobularData globe(int n) {
  GlobularData g(n);
  for (int k = 0; k < n; ++k) {
    int const s = k == 0 ? kMissing : 0;
    int const t = k == 0 ? kMissing : 1;
    g.add_cell(k, "s" + std::to_string(k), s, t);
    g.add_cell(k, "t" + std::to_string(k), s, t);
  }
  g.add_cell(n, "c", n == 0 ? kMissing : 0, n == 0 ? kMissing : 1);
  return g;
}

GlobularData boundary_globe(int n) {
  GlobularData g(n - 1);
  for (int k = 0; k < n; ++k) {
    int const s = k == 0 ? kMissing : 0;
    int const t = k == 0 ? kMissing : 1;
    g.add_cell(k, "s" + std::to_string(k), s, t);
    g.add_cell(k, "t" + std::to_string(k), s, t);
  }
  return g;
}

GlobularData disjoint_union(const GlobularData& a, const GlobularData& b) {
  int const d = std::max(a.trunc_dim(), b.trunc_dim());
  GlobularData out(d);
  // Right-hand names are primed until they no longer collide.
  std::vector<std::vector<int>> right_index(static_cast<std::size_t>(d + 1));
  for (int n = 0; n <= d; ++n) {
    for (int i = 0; i < static_cast<int>(a.count(n)); ++i)
      out.add_cell(n, a.name(n, i), n ? a.src(n, i) : kMissing,
                   n ? a.tgt(n, i) : kMissing);
    for (int i = 0; i < static_cast<int>(b.count(n)); ++i) {
      std::string name = b.name(n, i);
      while (out.find(n, name)) name += "'";
      int s = kMissing, t = kMissing;
      if (n > 0) {
        s = right_index[n - 1][b.src(n, i)];
        t = right_index[n - 1][b.tgt(n, i)];
      }
      right_index[n].push_back(out.add_cell(n, name, s, t));
    }
  }
  return out;
}

namespace {

struct MapCounter {
  const GlobularData& from;
  const GlobularData& to;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::uint64_t total = 0;
  std::vector<std::vector<int>> image;
  // (dim, index) visiting order: dimension-increasing.
  std::vector<std::pair<int, int>> order;

  std::uint64_t choices(int n, int i) const {
    std::uint64_t c = 0;
    for (int j = 0; j < static_cast<int>(to.count(n)); ++j)
      if (to.src(n, j) == image[n - 1][from.src(n, i)] &&
          to.tgt(n, j) == image[n - 1][from.tgt(n, i)])
        ++c;
    return c;
  }

  void run(std::size_t pos) {
    if (++nodes > budget)
      throw BudgetExceeded("count_maps exceeded its node budget");
    if (pos == order.size()) {
      // Top cells only constrain themselves: multiply their choice counts.
      std::uint64_t product = 1;
      int const top = from.trunc_dim();
      for (int i = 0; i < static_cast<int>(from.count(top)) && product; ++i)
        product *= top == 0 ? to.count(0) : choices(top, i);
      total += product;
      return;
    }
    auto [n, i] = order[pos];
    for (int c = 0; c < static_cast<int>(to.count(n)); ++c) {
      if (n > 0) {
        if (to.src(n, c) != image[n - 1][from.src(n, i)]) continue;
        if (to.tgt(n, c) != image[n - 1][from.tgt(n, i)]) continue;
      }
      image[n][i] = c;
      run(pos + 1);
    }
    image[n][i] = kMissing;
  }
};

}  // namespace

std::uint64_t count_maps(const GlobularData& from, const GlobularData& to,
                         CountOptions options) {
  if (!validate_globular(from).ok() || !validate_globular(to).ok())
    throw InvalidInput("count_maps requires valid globular sets");
  MapCounter counter{from, to, options.node_budget};
  counter.image.resize(static_cast<std::size_t>(from.trunc_dim() + 1));
  for (int n = 0; n <= from.trunc_dim(); ++n) {
    counter.image[n].assign(from.count(n), kMissing);
    if (n == from.trunc_dim()) break;
    for (int i = 0; i < static_cast<int>(from.count(n)); ++i)
      counter.order.emplace_back(n, i);
  }
  counter.run(0);
  return counter.total;
}

}  // namespace omega
