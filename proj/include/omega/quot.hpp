#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "omega/coind.hpp"
#include "omega/report.hpp"
#include "omega/scat.hpp"

namespace omega {

// A category whose morphisms are ~-classes of 1-cells.
struct QuotientCategory {
  struct Class {
    int src = 0;
    int tgt = 0;
    int representative = 0;    // 1-cell index
    std::vector<int> members;  // 1-cell indices
  };

  std::vector<std::string> objects;
  std::vector<Class> classes;
  std::vector<int> class_of;       // per 1-cell
  std::vector<int> identity;       // per object, a class
  std::vector<std::vector<int>> comp;  // class x class -> class or kMissing
  // Failures of representative independence or of ~ being an equivalence
  // relation, found while building.
  ValidationReport witness_log;

  bool is_iso(int cls) const;
};

QuotientCategory tau1(const FiniteOmegaCat& y);
QuotientCategory tau1(const Equivalences& eq);

// Category axioms on the class tables.
ValidationReport validate_quotient(const QuotientCategory& q);

// The strict 2-category with objects X_0, hom categories tau1(X(a, b)), and
// horizontal composition of 1-cells and of 2-cell classes.
struct QuotientTwoCategory {
  struct Hom {
    HomCategory hom;
    QuotientCategory quotient;
  };

  std::vector<std::string> objects;
  std::map<std::pair<int, int>, Hom> homs;
  // ((a, b, c), (class in (a,b), class in (b,c))) -> class in (a,c)
  std::map<std::tuple<int, int, int>, std::map<std::pair<int, int>, int>>
      horizontal;
  ValidationReport witness_log;

  // The hom-category object (1-cell of X) as an index in hom(a, b).
  int object_of(int a, int b, Cell one_cell) const;
};

QuotientTwoCategory tau2(const FiniteOmegaCat& x);

// Strict 2-category axioms: associativity and units of horizontal
// composition on 1-cells and classes, and interchange.
ValidationReport validate_two_category(const FiniteOmegaCat& x,
                                       const QuotientTwoCategory& t);

// Invertibility of [u] in tau1(X).
bool iso_in_quotient(const FiniteOmegaCat& x, Cell u);
bool iso_in_quotient(const QuotientCategory& q, Cell u);
// u as an equivalence 1-cell of tau2(X): some v with u v and v u isomorphic
// to identities in the hom quotients.
bool equivalence_in_tau2(const FiniteOmegaCat& x, const QuotientTwoCategory& t,
                         Cell u);

}  // namespace omega
