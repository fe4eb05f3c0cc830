#include "omega/poly.hpp"

#include <algorithm>
#include <string>

#include "omega/error.hpp"

namespace omega {

// Term ----------------------------------------------------------------------

struct Term::Node {
  Kind kind;
  int dim;
  std::string name;
  int count = 0;
  int k = 0;
  Term a;  // Id base, Comp left
  Term b;  // Comp right
};

Term Term::gen(std::string name, int dim) {
  Term t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::Gen, dim, std::move(name), 0, 0, {}, {}});
  return t;
}

Term Term::id(Term base, int count) {
  if (count < 0) throw InvalidInput("identity count must be non-negative");
  int const dim = base.dim() + count;
  Term t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::Id, dim, {}, count, 0, std::move(base), {}});
  return t;
}

Term Term::comp(int k, Term left, Term right) {
  int const dim = left.dim();
  Term t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::Comp, dim, {}, 0, k, std::move(left), std::move(right)});
  return t;
}

Term::Kind Term::kind() const { return node_->kind; }
int Term::dim() const { return node_->dim; }
const std::string& Term::name() const { return node_->name; }
int Term::count() const { return node_->count; }
int Term::k() const { return node_->k; }
const Term& Term::base() const { return node_->a; }
const Term& Term::left() const { return node_->a; }
const Term& Term::right() const { return node_->b; }

int Term::base_dim() const {
  return kind() == Kind::Id ? base().base_dim() : dim();
}

std::string Term::to_string() const {
  if (!node_) return "<unset>";
  switch (kind()) {
    case Kind::Gen:
      return name();
    case Kind::Id:
      return "id" + (count() == 1 ? std::string() : std::to_string(count())) +
             "(" + base().to_string() + ")";
    case Kind::Comp:
      return "(" + left().to_string() + " o" + std::to_string(k()) + " " +
             right().to_string() + ")";
  }
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  switch (a.kind()) {
    case Term::Kind::Gen:
      return a.name() == b.name();
    case Term::Kind::Id:
      return a.count() == b.count() && a.base() == b.base();
    case Term::Kind::Comp:
      return a.k() == b.k() && a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// Polygraph -----------------------------------------------------------------

const Generator* Polygraph::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &gens_[it->second];
}

const Generator& Polygraph::at(const std::string& name) const {
  auto const* g = find(name);
  if (!g) throw InvalidInput("unknown generator '" + name + "'");
  return *g;
}

const Generator& Polygraph::add(Generator g) {
  if (index_.count(g.name))
    throw InvalidInput("duplicate generator '" + g.name + "'");
  if (g.dim < 0 || g.dim > max_dim_)
    throw InvalidInput("generator '" + g.name + "' has dimension " +
                       std::to_string(g.dim) + " outside 0.." +
                       std::to_string(max_dim_));
  index_.emplace(g.name, gens_.size());
  gens_.push_back(std::move(g));
  return gens_.back();
}

const Generator& Polygraph::add(std::string name, int dim, Term src, Term tgt,
                                bool marked, std::string address) {
  return add(Generator{std::move(name), dim, std::move(src), std::move(tgt),
                       marked, std::move(address)});
}

// Normalization -------------------------------------------------------------

namespace {

Term compose_normal(int k, const Term& a, const Term& b);

void chain(int k, const Term& t, std::vector<Term>& out) {
  if (t.kind() == Term::Kind::Comp && t.k() == k) {
    chain(k, t.left(), out);
    chain(k, t.right(), out);
  } else {
    out.push_back(t);
  }
}

// Two identities whose bases sit above k: pull out the common lift.
Term merge_identities(int k, const Term& a, const Term& b) {
  int const m = std::min(a.count(), b.count());
  auto strip = [m](const Term& t) {
    return t.count() == m ? t.base() : Term::id(t.base(), t.count() - m);
  };
  Term inner = compose_normal(k, strip(a), strip(b));
  if (inner.kind() == Term::Kind::Id)
    return Term::id(inner.base(), inner.count() + m);
  return Term::id(inner, m);
}

// a o_k b for normalized a and b.
Term compose_normal(int k, const Term& a, const Term& b) {
  std::vector<Term> factors;
  chain(k, a, factors);
  chain(k, b, factors);
  std::vector<Term> kept;
  for (auto const& f : factors) {
    if (f.is_identity() && f.base_dim() <= k) continue;  // unit
    if (!kept.empty() && kept.back().is_identity() && f.is_identity()) {
      kept.back() = merge_identities(k, kept.back(), f);
      continue;
    }
    kept.push_back(f);
  }
  if (kept.empty()) return a;  // both factors are units, hence equal
  Term out = kept.front();
  for (std::size_t i = 1; i < kept.size(); ++i)
    out = Term::comp(k, out, kept[i]);
  return out;
}

}  // namespace

Term normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      return t;
    case Term::Kind::Id: {
      Term base = normalize(t.base());
      if (t.count() == 0) return base;
      if (base.kind() == Term::Kind::Id)
        return Term::id(base.base(), base.count() + t.count());
      return Term::id(base, t.count());
    }
    case Term::Kind::Comp:
      return compose_normal(t.k(), normalize(t.left()), normalize(t.right()));
  }
  return t;
}

bool terms_equal(const Term& a, const Term& b) {
  return normalize(a) == normalize(b);
}

std::pair<Term, Term> term_boundary(const Term& t, const Polygraph& p) {
  if (t.dim() == 0) throw InvalidInput("0-dimensional terms have no boundary");
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto const& g = p.at(t.name());
      return {normalize(g.src), normalize(g.tgt)};
    }
    case Term::Kind::Id: {
      if (t.count() == 0) return term_boundary(t.base(), p);
      Term lower = normalize(Term::id(t.base(), t.count() - 1));
      return {lower, lower};
    }
    case Term::Kind::Comp: {
      auto [sa, ta] = term_boundary(t.left(), p);
      auto [sb, tb] = term_boundary(t.right(), p);
      if (t.k() == t.dim() - 1) return {sa, tb};
      return {normalize(Term::comp(t.k(), sa, sb)),
              normalize(Term::comp(t.k(), ta, tb))};
    }
  }
  throw InvalidInput("malformed term");
}

Term term_src(const Term& t, const Polygraph& p, int k) {
  Term cur = normalize(t);
  while (cur.dim() > k) cur = term_boundary(cur, p).first;
  return cur;
}

Term term_tgt(const Term& t, const Polygraph& p, int k) {
  Term cur = normalize(t);
  while (cur.dim() > k) cur = term_boundary(cur, p).second;
  return cur;
}

void check_term(const Term& t, const Polygraph& p) {
  if (!t.valid()) throw InvalidInput("unset term");
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto const& g = p.at(t.name());
      if (g.dim != t.dim())
        throw InvalidInput("generator '" + t.name() + "' used at dimension " +
                           std::to_string(t.dim()) + ", declared " +
                           std::to_string(g.dim));
      return;
    }
    case Term::Kind::Id:
      check_term(t.base(), p);
      return;
    case Term::Kind::Comp: {
      check_term(t.left(), p);
      check_term(t.right(), p);
      if (t.left().dim() != t.right().dim() || t.k() < 0 ||
          t.k() >= t.left().dim())
        throw InvalidInput("composite " + t.to_string() +
                           " has mismatched dimensions");
      if (!(term_tgt(t.left(), p, t.k()) == term_src(t.right(), p, t.k())))
        throw InvalidInput("composite " + t.to_string() +
                           " is not boundary-compatible");
      return;
    }
  }
}

Term substitute(const Term& t, const std::map<std::string, Term>& by_name) {
  std::function<Term(const Term&)> go = [&](const Term& s) -> Term {
    switch (s.kind()) {
      case Term::Kind::Gen: {
        auto it = by_name.find(s.name());
        return it == by_name.end() ? s : it->second;
      }
      case Term::Kind::Id:
        return Term::id(go(s.base()), s.count());
      case Term::Kind::Comp:
        return Term::comp(s.k(), go(s.left()), go(s.right()));
    }
    return s;
  };
  return normalize(go(t));
}

Term rename(const Term& t,
            const std::function<std::string(const std::string&)>& f) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      return Term::gen(f(t.name()), t.dim());
    case Term::Kind::Id:
      return Term::id(rename(t.base(), f), t.count());
    case Term::Kind::Comp:
      return Term::comp(t.k(), rename(t.left(), f), rename(t.right(), f));
  }
  return t;
}

ValidationReport validate_polygraph(const Polygraph& p) {
  ValidationReport report;
  Polygraph seen(p.max_dim());
  for (auto const& g : p.generators()) {
    try {
      if (g.dim > 0) {
        if (!g.src.valid() || !g.tgt.valid())
          throw InvalidInput("missing boundary");
        check_term(g.src, seen);
        check_term(g.tgt, seen);
        if (g.src.dim() != g.dim - 1 || g.tgt.dim() != g.dim - 1)
          throw InvalidInput("boundary has the wrong dimension");
        if (g.dim >= 2) {
          auto [ss, st] = term_boundary(g.src, seen);
          auto [ts, tt] = term_boundary(g.tgt, seen);
          if (!(ss == ts))
            report.add("globular-source", g.dim, {g.name},
                       ss.to_string() + " vs " + ts.to_string());
          if (!(st == tt))
            report.add("globular-target", g.dim, {g.name},
                       st.to_string() + " vs " + tt.to_string());
        }
      }
      seen.add(g);
    } catch (const InvalidInput& e) {
      report.add("ill-formed-boundary", g.dim, {g.name}, e.what());
      seen.add(Generator{g.name, g.dim, {}, {}, g.marked, g.address});
    }
  }
  return report;
}

Cell eval_term(const Term& t, const FiniteOmegaCat& x, const Assignment& a) {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto it = a.find(t.name());
      if (it == a.end())
        throw InvalidInput("generator '" + t.name() + "' is unassigned");
      if (it->second.dim != t.dim())
        throw InvalidInput("generator '" + t.name() +
                           "' is assigned a cell of the wrong dimension");
      return it->second;
    }
    case Term::Kind::Id:
      return x.lift(eval_term(t.base(), x, a), t.dim());
    case Term::Kind::Comp: {
      Cell const l = eval_term(t.left(), x, a);
      Cell const r = eval_term(t.right(), x, a);
      auto c = x.try_compose(t.k(), l, r);
      if (!c)
        throw InvalidInput("composite " + t.to_string() +
                           " is undefined under the assignment");
      return *c;
    }
  }
  throw InvalidInput("malformed term");
}

// Emitters ------------------------------------------------------------------

namespace {

std::string globe_address(bool source, int k) {
  return (source ? "s" : "t") + std::to_string(k);
}

// s<k>, t<k> for k < n; the pair at n-1 may carry other names.
void add_globe_boundary(Polygraph& p, int n, const std::string& top_src,
                        const std::string& top_tgt) {
  std::string prev_s, prev_t;
  for (int k = 0; k < n; ++k) {
    std::string s = k == n - 1 ? top_src : globe_address(true, k);
    std::string t = k == n - 1 ? top_tgt : globe_address(false, k);
    Term bs = k ? Term::gen(prev_s, k - 1) : Term();
    Term bt = k ? Term::gen(prev_t, k - 1) : Term();
    p.add(s, k, bs, bt, false, globe_address(true, k));
    p.add(t, k, bs, bt, false, globe_address(false, k));
    prev_s = s;
    prev_t = t;
  }
}

}  // namespace

Polygraph emit_marked_globe(int n) {
  if (n < 1) throw InvalidInput("the marked globe needs n >= 1");
  Polygraph p(n);
  add_globe_boundary(p, n, globe_address(true, n - 1),
                     globe_address(false, n - 1));
  p.add("u", n, p.term(globe_address(true, n - 1)),
        p.term(globe_address(false, n - 1)), true, "u");
  return p;
}

Polygraph emit_F(int n) {
  if (n < 1) throw InvalidInput("emit_F needs n >= 1");
  Polygraph p(n + 1);
  add_globe_boundary(p, n, "x", "y");
  Term x = p.term("x"), y = p.term("y");
  p.add("u", n, x, y, true, "u");
  p.add("v", n, y, x, false, "uv");
  p.add("w", n, y, x, false, "uw");
  Term u = p.term("u"), v = p.term("v"), w = p.term("w");
  p.add("p", n + 1, Term::comp(n - 1, u, v), Term::id(x), true, "up");
  p.add("q", n + 1, Term::comp(n - 1, w, u), Term::id(y), true, "uq");
  return p;
}

Polygraph emit_H(int n) {
  if (n < 1) throw InvalidInput("emit_H needs n >= 1");
  Polygraph p(n + 2);
  add_globe_boundary(p, n, "x", "y");
  Term x = p.term("x"), y = p.term("y");
  p.add("u", n, x, y, true, "u");
  p.add("v", n, y, x, false, "uv");
  Term u = p.term("u"), v = p.term("v");
  p.add("p", n + 1, Term::id(x), Term::comp(n - 1, u, v), true, "up");
  p.add("q", n + 1, Term::comp(n - 1, v, u), Term::id(y), true, "uq");
  Term pp = p.term("p"), q = p.term("q");
  // Unitors and the associator are identities in the strict reflection.
  Term target = Term::comp(n, Term::comp(n - 1, pp, Term::id(u)),
                           Term::comp(n - 1, Term::id(u), q));
  p.add("r", n + 2, Term::id(u), normalize(target), true, "ur");
  return p;
}

namespace {

// Glues a copy of F^{dim g} along the marked generator g.
void glue_F(Polygraph& out, const Generator& g) {
  Polygraph const f = emit_F(g.dim);
  std::map<std::string, Term> image;
  Term const gt = Term::gen(g.name, g.dim);
  for (auto const& fg : f.generators()) {
    if (fg.address == "u") {
      image[fg.name] = gt;
    } else if (fg.dim < g.dim) {
      bool const source = fg.address[0] == 's';
      image[fg.name] = source ? term_src(gt, out, fg.dim)
                              : term_tgt(gt, out, fg.dim);
    } else {
      std::string name = fg.name + "@" + g.name;
      out.add(name, fg.dim, substitute(fg.src, image),
              substitute(fg.tgt, image), fg.marked,
              g.address + fg.address.substr(1));
      image[fg.name] = Term::gen(name, fg.dim);
    }
  }
}

}  // namespace

std::vector<Polygraph> emit_EF_ladder(int n, int m_max) {
  if (n < 1 || m_max < 0) throw InvalidInput("emit_EF_ladder needs n >= 1");
  std::vector<Polygraph> steps{emit_marked_globe(n)};
  for (int m = 0; m < m_max; ++m) {
    Polygraph next = steps.back();
    next.set_max_dim(n + m + 1);
    for (auto const& g : steps.back().generators())
      if (g.marked && g.dim == n + m) glue_F(next, g);
    steps.push_back(std::move(next));
  }
  return steps;
}

Polygraph ladder_colimit(int n, int D) {
  if (D < n) throw InvalidInput("ladder_colimit needs D >= n");
  return truncate(emit_EF_ladder(n, D - n + 1).back(), D);
}

Polygraph emit_EF_witness(int n, int D) {
  if (n < 1 || D < n) throw InvalidInput("emit_EF_witness needs 1 <= n <= D");
  Polygraph p(D);
  add_globe_boundary(p, n, globe_address(true, n - 1),
                     globe_address(false, n - 1));
  // x_phi for all phi of the current length, in lexicographic order
  std::vector<std::string> level{"u"};
  p.add("u", n, p.term(globe_address(true, n - 1)),
        p.term(globe_address(false, n - 1)), true, "u");
  for (int m = 0;; ++m) {
    int const dim = n + m;
    for (auto const& phi : level) {
      Term x = p.term(phi);
      auto [s, t] = term_boundary(x, p);
      p.add(phi + "v", dim, t, s, false, phi + "v");
      p.add(phi + "w", dim, t, s, false, phi + "w");
    }
    if (dim + 1 > D) break;
    std::vector<std::string> next;
    for (auto const& phi : level) {
      Term x = p.term(phi);
      auto [s, t] = term_boundary(x, p);
      p.add(phi + "p", dim + 1, normalize(Term::comp(dim - 1, x, p.term(phi + "v"))),
            Term::id(s), true, phi + "p");
      next.push_back(phi + "p");
    }
    for (auto const& phi : level) {
      Term x = p.term(phi);
      auto [s, t] = term_boundary(x, p);
      p.add(phi + "q", dim + 1, normalize(Term::comp(dim - 1, p.term(phi + "w"), x)),
            Term::id(t), true, phi + "q");
      next.push_back(phi + "q");
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return p;
}

namespace {

std::string shift_address(const std::string& a) {
  if (a.size() >= 2 && (a[0] == 's' || a[0] == 't') &&
      std::all_of(a.begin() + 1, a.end(), ::isdigit))
    return a.substr(0, 1) + std::to_string(std::stoi(a.substr(1)) + 1);
  return a;
}

Term suspend_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      return Term::gen("S" + t.name(), t.dim() + 1);
    case Term::Kind::Id:
      return Term::id(suspend_term(t.base()), t.count());
    case Term::Kind::Comp:
      return Term::comp(t.k() + 1, suspend_term(t.left()),
                        suspend_term(t.right()));
  }
  return t;
}

}  // namespace

Polygraph suspend_presentation(const Polygraph& p) {
  Polygraph out(p.max_dim() + 1);
  out.add("s0", 0, {}, {}, false, "s0");
  out.add("t0", 0, {}, {}, false, "t0");
  Term const star = out.term("s0"), star2 = out.term("t0");
  for (auto const& g : p.generators()) {
    Term s = g.dim == 0 ? star : suspend_term(g.src);
    Term t = g.dim == 0 ? star2 : suspend_term(g.tgt);
    out.add("S" + g.name, g.dim + 1, s, t, g.marked, shift_address(g.address));
  }
  return out;
}

Polygraph emit_OR(int D) {
  if (D < 1) throw InvalidInput("emit_OR needs D >= 1");
  Polygraph p(D);
  p.add("x", 0, {}, {}, false, "s0");
  p.add("y", 0, {}, {}, false, "t0");
  Term x = p.term("x"), y = p.term("y");
  p.add("u", 1, x, y, false, "u");
  p.add("v", 1, y, x, false, "uv");
  p.add("w", 1, y, x, false, "uw");
  Term u = p.term("u"), v = p.term("v"), w = p.term("w");
  // Glue maps on the suspension, keyed by suspended generator name.
  std::map<std::string, Term> glue_p{{"Sx", Term::comp(0, u, v)},
                                     {"Sy", Term::id(x)}};
  std::map<std::string, Term> glue_q{{"Sx", Term::comp(0, w, u)},
                                     {"Sy", Term::id(y)}};
  std::vector<std::string> fresh{"u", "v", "w"};
  for (int m = 1; m < D; ++m) {
    std::vector<std::string> added;
    for (auto [c, glue] : {std::pair{'p', &glue_p}, std::pair{'q', &glue_q}}) {
      for (auto const& name : fresh) {
        auto const& g = p.at(name);
        std::string nn = std::string(1, c) + "(" + name + ")";
        Term s = substitute(suspend_term(g.src), *glue);
        Term t = substitute(suspend_term(g.tgt), *glue);
        p.add(nn, g.dim + 1, s, t, false,
              "u" + std::string(1, c) + g.address.substr(1));
        (*glue)["S" + name] = Term::gen(nn, g.dim + 1);
        added.push_back(nn);
      }
    }
    fresh = std::move(added);
  }
  return p;
}

Polygraph truncate(const Polygraph& p, int D) {
  Polygraph out(D);
  for (auto const& g : p.generators())
    if (g.dim <= D) out.add(g);
  return out;
}

bool presentations_isomorphic(const Polygraph& p, const Polygraph& q,
                              bool compare_marking) {
  if (p.max_dim() != q.max_dim() || p.size() != q.size()) return false;
  std::map<std::string, const Generator*> by_address;
  for (auto const& g : q.generators())
    if (!by_address.emplace(g.address, &g).second) return false;
  std::map<std::string, std::string> p_addr, q_addr;
  for (auto const& g : p.generators()) p_addr[g.name] = g.address;
  for (auto const& g : q.generators()) q_addr[g.name] = g.address;
  auto relabel = [](const std::map<std::string, std::string>& addr) {
    return [&addr](const std::string& n) { return addr.at(n); };
  };
  std::map<std::string, int> seen;
  for (auto const& g : p.generators()) {
    if (seen[g.address]++) return false;
    auto it = by_address.find(g.address);
    if (it == by_address.end()) return false;
    auto const& h = *it->second;
    if (g.dim != h.dim) return false;
    if (compare_marking && g.marked != h.marked) return false;
    if (g.dim == 0) continue;
    if (!(normalize(rename(g.src, relabel(p_addr))) ==
          normalize(rename(h.src, relabel(q_addr)))))
      return false;
    if (!(normalize(rename(g.tgt, relabel(p_addr))) ==
          normalize(rename(h.tgt, relabel(q_addr)))))
      return false;
  }
  return true;
}

Census census(const Polygraph& p) {
  Census c;
  c.total.assign(static_cast<std::size_t>(p.max_dim() + 1), 0);
  c.marked.assign(static_cast<std::size_t>(p.max_dim() + 1), 0);
  for (auto const& g : p.generators()) {
    ++c.total[g.dim];
    if (g.marked) ++c.marked[g.dim];
  }
  return c;
}

}  // namespace omega
