/*
  finite_type.hpp — the finite simple types A..G, their invariant degrees,
  and the closed-form Poincare polynomials built from them.
*/

#pragma once

#include "weyl/cartan.hpp"
#include "weyl/series.hpp"

#include <string>
#include <vector>

namespace weyl {

class FiniteType {
 public:
  // Accepted ranks: A_n n>=1, B_n n>=2, C_n n>=3, D_n n>=4, E_6..E_8,
  // F_4, G_2. Throws UnknownType otherwise.
  FiniteType(char family, int rank);

  // "A4", "B5", "E8", ...
  static FiniteType parse(const std::string& name);

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  // Degrees d_1..d_n of the basic polynomial invariants.
  std::vector<int> degrees() const;

  // Number of positive roots: sum of (d_i - 1).
  int positive_root_count() const;

  // |W| = product of the degrees.
  Integer weyl_order() const;

  // The standard Cartan matrix of this type.
  CartanMatrix cartan() const;

  bool operator==(const FiniteType& o) const {
    return family_ == o.family_ && rank_ == o.rank_;
  }
  bool operator!=(const FiniteType& o) const { return !(*this == o); }

 private:
  char family_;
  int rank_;
};

// Every valid finite simple type with rank <= max_rank, in family order
// A, B, C, D, E, F, G and increasing rank within a family.
std::vector<FiniteType> all_finite_types(int max_rank);

// Product over the degrees of (t^{d_i} - 1)/(t - 1); degree equals the
// number of positive roots and the value at t = 1 equals |W|.
IntPoly finite_poincare(const FiniteType& ft);

// Poincare series of the untwisted affinization: the finite polynomial
// times prod_i 1/(1 - t^{d_i - 1}), carried to the given truncation.
TruncSeries affine_poincare(const FiniteType& ft, int max_order);

// Cartan matrix of the untwisted affine extension. Nodes 0..n-1 are the
// finite diagram; node n is the added one. Derived from the computed
// highest root rather than a transcribed attachment table.
CartanMatrix affine_cartan(const FiniteType& ft);

}  // namespace weyl
