#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omega/report.hpp"
#include "omega/scat.hpp"

namespace omega {

// Formal composite over generators: Gen | Id(base, count) | Comp(k, a, b).
class Term {
 public:
  enum class Kind { Gen, Id, Comp };

  Term() = default;
  static Term gen(std::string name, int dim);
  static Term id(Term base, int count = 1);
  static Term comp(int k, Term left, Term right);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  int dim() const;
  const std::string& name() const;  // Gen
  int count() const;                 // Id
  int k() const;                     // Comp
  const Term& base() const;          // Id
  const Term& left() const;          // Comp
  const Term& right() const;         // Comp

  // Dimension of the underlying non-identity term (the term itself unless Id).
  int base_dim() const;
  bool is_identity() const { return kind() == Kind::Id; }

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Generator {
  std::string name;
  int dim = 0;
  Term src;  // unset for 0-generators
  Term tgt;
  bool marked = false;
  std::string address;
};

// Generators are listed so that boundaries only mention earlier ones.
class Polygraph {
 public:
  Polygraph() = default;
  explicit Polygraph(int max_dim) : max_dim_(max_dim) {}

  int max_dim() const { return max_dim_; }
  void set_max_dim(int d) { max_dim_ = d; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  const Generator* find(const std::string& name) const;
  const Generator& at(const std::string& name) const;  // throws if unknown
  Term term(const std::string& name) const { return Term::gen(name, at(name).dim); }

  // Appends a generator; throws on duplicate names or dim above max_dim.
  const Generator& add(Generator g);
  // Convenience: 0-generator or generator with given boundary terms.
  const Generator& add(std::string name, int dim, Term src, Term tgt,
                       bool marked, std::string address);

 private:
  int max_dim_ = 0;
  std::vector<Generator> gens_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Strict-category normal form: identity merging, unit absorption, identity
// functoriality, left-associated chains.
Term normalize(const Term& t);
bool terms_equal(const Term& a, const Term& b);

// Source and target of a positive-dimensional term, normalized.
std::pair<Term, Term> term_boundary(const Term& t, const Polygraph& p);
Term term_src(const Term& t, const Polygraph& p, int k);
Term term_tgt(const Term& t, const Polygraph& p, int k);

// Throws InvalidInput when a generator is unknown, a dimension is wrong, or
// a composite is not boundary-compatible.
void check_term(const Term& t, const Polygraph& p);

// Replaces generators by terms (missing names are kept), then normalizes.
Term substitute(const Term& t, const std::map<std::string, Term>& by_name);
Term rename(const Term& t,
            const std::function<std::string(const std::string&)>& f);

ValidationReport validate_polygraph(const Polygraph& p);

using Assignment = std::map<std::string, Cell>;

// Value of a term in a table category. Throws InvalidInput when a generator
// is unassigned, has the wrong dimension, or a composite is undefined.
Cell eval_term(const Term& t, const FiniteOmegaCat& x, const Assignment& a);

// Emitters -------------------------------------------------------------------

// The marked n-globe: s<k>, t<k> for k < n and the marked generator u.
Polygraph emit_marked_globe(int n);
Polygraph emit_F(int n);
Polygraph emit_H(int n);
// Steps 0..m_max of the pushout ladder.
std::vector<Polygraph> emit_EF_ladder(int n, int m_max);
// The ladder's colimit cut at dimension D.
Polygraph ladder_colimit(int n, int D);
Polygraph emit_EF_witness(int n, int D);
Polygraph emit_OR(int D);
Polygraph suspend_presentation(const Polygraph& p);
Polygraph truncate(const Polygraph& p, int D);

// Matches generators by address and compares dimension, marking (optional),
// and normalized boundaries.
bool presentations_isomorphic(const Polygraph& p, const Polygraph& q,
                              bool compare_marking = true);

struct Census {
  std::vector<int> total;   // by dimension 0..max_dim
  std::vector<int> marked;
};
Census census(const Polygraph& p);

}  // namespace omega
