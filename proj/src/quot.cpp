#include "omega/quot.hpp"

#include <string>

#include "omega/error.hpp"

namespace omega {

bool QuotientCategory::is_iso(int cls) const {
  auto const& c = classes[cls];
  for (std::size_t other = 0; other < classes.size(); ++other) {
    if (comp[cls][other] == identity[c.src] &&
        comp[other][cls] == identity[c.tgt])
      return true;
  }
  return false;
}

QuotientCategory tau1(const Equivalences& eq) {
  auto const& y = eq.category();
  if (y.trunc_dim() < 1) throw InvalidInput("tau1 needs trunc_dim >= 1");
  QuotientCategory q;
  for (Cell o : y.cells(0)) q.objects.push_back(y.name(o));
  q.class_of.assign(y.count(1), kMissing);
  for (Cell c : y.cells(1)) {
    for (std::size_t k = 0; k < q.classes.size(); ++k) {
      Cell const rep{1, q.classes[k].representative};
      if (y.parallel(rep, c) && eq.similar(rep, c)) {
        q.class_of[c.index] = static_cast<int>(k);
        q.classes[k].members.push_back(c.index);
        break;
      }
    }
    if (q.class_of[c.index] == kMissing) {
      q.class_of[c.index] = static_cast<int>(q.classes.size());
      q.classes.push_back(
          {y.src(c).index, y.tgt(c).index, c.index, {c.index}});
    }
  }
  // ~ must be an equivalence relation for the grouping above to be a
  // partition by ~.
  for (Cell a : y.cells(1))
    for (Cell b : y.cells(1)) {
      if (!y.parallel(a, b)) continue;
      bool const same = q.class_of[a.index] == q.class_of[b.index];
      if (same != eq.similar(a, b))
        q.witness_log.add("similarity-partition", 1, {y.name(a), y.name(b)});
    }
  for (Cell o : y.cells(0))
    q.identity.push_back(q.class_of[y.identity(o).index]);
  auto const n = q.classes.size();
  q.comp.assign(n, std::vector<int>(n, kMissing));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto const& ci = q.classes[i];
      auto const& cj = q.classes[j];
      if (ci.tgt != cj.src) continue;
      Cell const r =
          y.compose(0, {1, ci.representative}, {1, cj.representative});
      q.comp[i][j] = q.class_of[r.index];
      for (int a : ci.members)
        for (int b : cj.members) {
          Cell const ab = y.compose(0, {1, a}, {1, b});
          if (q.class_of[ab.index] != q.comp[i][j])
            q.witness_log.add("composition-representative", 1,
                              {y.name({1, a}), y.name({1, b})});
        }
    }
  return q;
}

QuotientCategory tau1(const FiniteOmegaCat& y) {
  return tau1(Equivalences(y));
}

ValidationReport validate_quotient(const QuotientCategory& q) {
  ValidationReport report;
  auto const n = static_cast<int>(q.classes.size());
  for (int i = 0; i < n; ++i) {
    auto const& c = q.classes[i];
    if (q.comp[q.identity[c.src]][i] != i || q.comp[i][q.identity[c.tgt]] != i)
      report.add("quotient-unit", 1, {std::to_string(i)});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int const ab = q.comp[a][b];
      if (ab == kMissing) continue;
      for (int c = 0; c < n; ++c) {
        int const bc = q.comp[b][c];
        if (bc == kMissing) continue;
        if (q.comp[ab][c] != q.comp[a][bc])
          report.add("quotient-associativity", 1,
                     {std::to_string(a), std::to_string(b), std::to_string(c)});
      }
    }
  return report;
}

bool iso_in_quotient(const QuotientCategory& q, Cell u) {
  return q.is_iso(q.class_of[u.index]);
}

bool iso_in_quotient(const FiniteOmegaCat& x, Cell u) {
  if (u.dim != 1) throw InvalidInput("iso_in_quotient takes a 1-cell");
  return iso_in_quotient(tau1(x), u);
}

// tau2 ----------------------------------------------------------------------

int QuotientTwoCategory::object_of(int a, int b, Cell one_cell) const {
  return homs.at({a, b}).hom.child[0][one_cell.index];
}

QuotientTwoCategory tau2(const FiniteOmegaCat& x) {
  if (x.trunc_dim() < 2) throw InvalidInput("tau2 needs trunc_dim >= 2");
  QuotientTwoCategory t;
  for (Cell o : x.cells(0)) t.objects.push_back(x.name(o));
  auto const objects = x.cells(0);
  for (Cell a : objects)
    for (Cell b : objects) {
      HomCategory h = hom(x, a, b);
      QuotientCategory q = tau1(h.cat);
      t.witness_log.merge(q.witness_log, "hom(" + x.name(a) + "," +
                                              x.name(b) + "):");
      t.homs.emplace(std::pair{a.index, b.index},
                     QuotientTwoCategory::Hom{std::move(h), std::move(q)});
    }
  for (Cell a : objects)
    for (Cell b : objects)
      for (Cell c : objects) {
        auto const& ab = t.homs.at({a.index, b.index});
        auto const& bc = t.homs.at({b.index, c.index});
        auto const& ac = t.homs.at({a.index, c.index});
        auto& table = t.horizontal[{a.index, b.index, c.index}];
        for (std::size_t i = 0; i < ab.quotient.classes.size(); ++i)
          for (std::size_t j = 0; j < bc.quotient.classes.size(); ++j) {
            auto two_cell = [](const QuotientTwoCategory::Hom& h, int member) {
              return h.hom.to_parent(Cell{1, member});
            };
            auto const& ci = ab.quotient.classes[i];
            auto const& cj = bc.quotient.classes[j];
            Cell const r = x.compose(0, two_cell(ab, ci.representative),
                                     two_cell(bc, cj.representative));
            int const cls = ac.quotient.class_of[ac.hom.from_parent(r)->index];
            table[{static_cast<int>(i), static_cast<int>(j)}] = cls;
            for (int p : ci.members)
              for (int q : cj.members) {
                Cell const pq =
                    x.compose(0, two_cell(ab, p), two_cell(bc, q));
                if (ac.quotient.class_of[ac.hom.from_parent(pq)->index] != cls)
                  t.witness_log.add("horizontal-representative", 2,
                                    {x.name(two_cell(ab, p)),
                                     x.name(two_cell(bc, q))});
              }
          }
      }
  return t;
}

ValidationReport validate_two_category(const FiniteOmegaCat& x,
                                       const QuotientTwoCategory& t) {
  ValidationReport report;
  auto const objects = x.cells(0);
  auto h = [&](int a, int b, int c, int i, int j) {
    return t.horizontal.at({a, b, c}).at({i, j});
  };
  auto classes = [&](int a, int b) {
    return static_cast<int>(t.homs.at({a, b}).quotient.classes.size());
  };
  // class of the identity 2-cell on the identity 1-cell of a
  auto unit = [&](int a) {
    auto const& q = t.homs.at({a, a}).quotient;
    int const obj = t.object_of(a, a, x.identity(Cell{0, a}));
    return q.identity[obj];
  };
  for (Cell oa : objects)
    for (Cell ob : objects) {
      int const a = oa.index, b = ob.index;
      for (int i = 0; i < classes(a, b); ++i) {
        if (h(a, a, b, unit(a), i) != i || h(a, b, b, i, unit(b)) != i)
          report.add("horizontal-unit", 2, {x.name(oa), x.name(ob)},
                     "class " + std::to_string(i));
      }
      for (Cell oc : objects) {
        int const c = oc.index;
        auto const& qab = t.homs.at({a, b}).quotient;
        auto const& qbc = t.homs.at({b, c}).quotient;
        auto const& qac = t.homs.at({a, c}).quotient;
        // identities of hom objects compose to identities
        for (std::size_t f = 0; f < qab.objects.size(); ++f)
          for (std::size_t g = 0; g < qbc.objects.size(); ++g) {
            Cell const fx = t.homs.at({a, b}).hom.to_parent({0, static_cast<int>(f)});
            Cell const gx = t.homs.at({b, c}).hom.to_parent({0, static_cast<int>(g)});
            int const fg = t.object_of(a, c, x.compose(0, fx, gx));
            if (h(a, b, c, qab.identity[f], qbc.identity[g]) != qac.identity[fg])
              report.add("horizontal-identity", 2, {x.name(fx), x.name(gx)});
          }
        // interchange
        int const nab = classes(a, b), nbc = classes(b, c);
        for (int p = 0; p < nab; ++p)
          for (int p2 = 0; p2 < nab; ++p2) {
            int const pp = qab.comp[p][p2];
            if (pp == kMissing) continue;
            for (int q = 0; q < nbc; ++q)
              for (int q2 = 0; q2 < nbc; ++q2) {
                int const qq = qbc.comp[q][q2];
                if (qq == kMissing) continue;
                int const lhs = h(a, b, c, pp, qq);
                int const rhs = qac.comp[h(a, b, c, p, q)][h(a, b, c, p2, q2)];
                if (lhs != rhs)
                  report.add("interchange", 2, {x.name(oa), x.name(ob), x.name(oc)});
              }
          }
        for (Cell oe : objects) {
          int const e = oe.index;
          for (int p = 0; p < nab; ++p)
            for (int q = 0; q < nbc; ++q)
              for (int r = 0; r < classes(c, e); ++r)
                if (h(a, c, e, h(a, b, c, p, q), r) !=
                    h(a, b, e, p, h(b, c, e, q, r)))
                  report.add("horizontal-associativity", 2,
                             {x.name(oa), x.name(ob), x.name(oc), x.name(oe)});
        }
      }
    }
  return report;
}

bool equivalence_in_tau2(const FiniteOmegaCat& x, const QuotientTwoCategory& t,
                         Cell u) {
  if (u.dim != 1) throw InvalidInput("equivalence_in_tau2 takes a 1-cell");
  int const a = x.src(u).index, b = x.tgt(u).index;
  auto iso_to_identity = [&](int o, Cell composite) {
    auto const& q = t.homs.at({o, o}).quotient;
    int const from = t.object_of(o, o, composite);
    int const to = t.object_of(o, o, x.identity(Cell{0, o}));
    for (std::size_t c = 0; c < q.classes.size(); ++c)
      if (q.classes[c].src == from && q.classes[c].tgt == to &&
          q.is_iso(static_cast<int>(c)))
        return true;
    return false;
  };
  for (Cell v : x.cells_between(x.tgt(u), x.src(u)))
    if (iso_to_identity(a, x.compose(0, u, v)) &&
        iso_to_identity(b, x.compose(0, v, u)))
      return true;
  return false;
}

}  // namespace omega
