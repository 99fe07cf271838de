/*
  factor.hpp — factorizations of growth series: parabolic quotients
  P(W) = P(W_J) * R, explicit rational-function checks, and the discovery
  of finite denominator polynomials Q with P(H) = P(G)/Q.
*/

#pragma once

#include "weyl/finite_type.hpp"
#include "weyl/growth.hpp"
#include "weyl/series.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace weyl {

TruncSeries to_series(const GrowthSeries& g);

// num/den with den(0) = +-1, so the expansion has integer coefficients.
struct RationalFunction {
  IntPoly numerator;
  IntPoly denominator;
};

TruncSeries expand(const RationalFunction& rf, int truncation);

// h / sub. When sub is the Poincare polynomial of a parabolic subgroup
// the quotient counts coset representatives and must be nonnegative;
// a negative coefficient throws NegativeCoefficient unless the caller
// opts into exploratory mode.
TruncSeries compute_R(const TruncSeries& h, const TruncSeries& sub,
                      bool allow_negative = false);
TruncSeries compute_R(const TruncSeries& h, const IntPoly& sub,
                      bool allow_negative = false);

struct FactorizationReport {
  bool pass = false;
  // First order where the convolution or division route disagreed.
  std::optional<int> first_mismatch;
  std::optional<std::pair<Integer, Integer>> mismatch_values;
  GrowthSeries full;
  GrowthSeries cosets;
  IntPoly parabolic_poincare;
};

// Enumerates m once, counting all images and the J-dominant ones, builds
// P(W_J) by exhausting the subdiagram, and checks at every order that
//   full_k = sum_s P(W_J)_s * cosets_{k-s}
// and that the coset counts agree with the series quotient. The
// J-subdiagram must be finite type (throws NotFinite otherwise).
FactorizationReport verify_factorization(const CartanMatrix& m,
                                         const NodeSet& J, int max_order,
                                         const EnumOptions& opt = {});

// A successful P(H) = P(G)/Q fit.
struct DenominatorFit {
  FiniteType finite_type;
  IntPoly q;
  std::size_t observed_degree;
  int positive_roots;  // D of the finite type
  int verified_to;     // truncation the identity was checked through
  int guard;           // trailing zeros certifying termination
};

// Divides finite_poincare(g) by h and reports a fit when the quotient
// terminates (its last `guard` coefficients vanish). The observed degree
// of a genuine fit lands at D or D-1, so the series must reach at least
// D - 1 + guard; shallower input throws TruncationTooShallow.
std::optional<DenominatorFit> fit_denominator(const TruncSeries& h,
                                              const FiniteType& g,
                                              int guard = 1);

// Tries every finite simple type of rank <= max_rank that the truncation
// of h can support; results sorted by (positive roots, family, rank).
std::vector<DenominatorFit> search_denominator(const TruncSeries& h,
                                               int max_rank, int guard = 1);

struct RationalCheckResult {
  bool ok = false;
  std::optional<int> first_mismatch;
};

// Expands rf to the target's truncation and compares coefficients.
RationalCheckResult rational_check(const RationalFunction& rf,
                                   const TruncSeries& target);

}  // namespace weyl
