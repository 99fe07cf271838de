#include "weyl/factor.hpp"

#include "weyl/errors.hpp"

#include <algorithm>
#include <sstream>

namespace weyl {

TruncSeries to_series(const GrowthSeries& g) {
  return TruncSeries::from_uint64(g.coeffs);
}

TruncSeries expand(const RationalFunction& rf, int truncation) {
  TruncSeries num = TruncSeries::from_poly(rf.numerator, truncation);
  TruncSeries den = TruncSeries::from_poly(rf.denominator, truncation);
  return series_div(num, den);
}

TruncSeries compute_R(const TruncSeries& h, const TruncSeries& sub,
                      bool allow_negative) {
  TruncSeries r = series_div(h, sub);
  if (!allow_negative) {
    for (int k = 0; k <= r.truncation(); ++k)
      if (r.coeff(k) < 0) {
        std::ostringstream os;
        os << "compute_R: negative coefficient " << r.coeff(k) << " at order "
           << k << "; divisor is not a parabolic factor";
        throw NegativeCoefficient(os.str(), k);
      }
  }
  return r;
}

TruncSeries compute_R(const TruncSeries& h, const IntPoly& sub,
                      bool allow_negative) {
  return compute_R(h, TruncSeries::from_poly(sub, h.truncation()),
                   allow_negative);
}

namespace {

// Poincare polynomial of the (finite-type) subdiagram on J: the product
// over connected components of their complete growth polynomials.
IntPoly parabolic_poincare_poly(const CartanMatrix& m, const NodeSet& J,
                                const EnumOptions& opt) {
  NodeSet j = J;
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  IntPoly acc = IntPoly::one();
  if (j.empty()) return acc;
  IntMatrix sub = principal_submatrix(m, j);
  for (const auto& comp : connected_components(sub)) {
    IntMatrix block(comp.size(), std::vector<std::int64_t>(comp.size()));
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = 0; b < comp.size(); ++b)
        block[a][b] = sub[comp[a]][comp[b]];
    CartanMatrix cm = validate_gcm(block);
    if (cm.cartan_class() != CartanClass::Finite)
      throw NotFinite("verify_factorization: J-subdiagram component is " +
                      to_string(cm.cartan_class()) + ", not finite type");
    GrowthSeries g = complete_growth(cm, opt);
    std::vector<Integer> c(g.coeffs.begin(), g.coeffs.end());
    acc = acc * IntPoly(std::move(c));
  }
  return acc;
}

}  // namespace

FactorizationReport verify_factorization(const CartanMatrix& m,
                                         const NodeSet& J, int max_order,
                                         const EnumOptions& opt) {
  FactorizationReport rep;
  rep.parabolic_poincare = parabolic_poincare_poly(m, J, opt);

  Enumeration e = enumerate_levels(m, max_order, J, -1, opt);
  rep.full = e.full;
  rep.cosets = e.filtered;

  const int t = rep.full.truncation();
  TruncSeries full_s = to_series(rep.full);
  TruncSeries coset_s = to_series(rep.cosets);
  TruncSeries sub_s = TruncSeries::from_poly(rep.parabolic_poincare, t);

  TruncSeries conv = series_mul(sub_s, coset_s);
  TruncSeries quot = series_div(full_s, sub_s);
  rep.pass = true;
  for (int k = 0; k <= t; ++k) {
    if (conv.coeff(k) != full_s.coeff(k)) {
      rep.pass = false;
      rep.first_mismatch = k;
      rep.mismatch_values = {full_s.coeff(k), conv.coeff(k)};
      break;
    }
    if (quot.coeff(k) != coset_s.coeff(k)) {
      rep.pass = false;
      rep.first_mismatch = k;
      rep.mismatch_values = {coset_s.coeff(k), quot.coeff(k)};
      break;
    }
  }
  return rep;
}

std::optional<DenominatorFit> fit_denominator(const TruncSeries& h,
                                              const FiniteType& g, int guard) {
  if (h.coeff(0) != 1)
    throw Error("fit_denominator: series must have constant term 1");
  if (guard < 1) throw Error("fit_denominator: guard must be >= 1");
  const int d = g.positive_root_count();
  if (h.truncation() < d - 1 + guard) {
    std::ostringstream os;
    os << "fit_denominator: need the series through t^" << d - 1 + guard
       << " to test " << g.name() << " (positive roots " << d
       << ", guard " << guard << "); have t^" << h.truncation();
    throw TruncationTooShallow(os.str());
  }
  TruncSeries num = TruncSeries::from_poly(finite_poincare(g), h.truncation());
  TruncSeries qs = series_div(num, h);
  auto poly = polynomial_terminates(qs, guard);
  if (!poly) return std::nullopt;
  DenominatorFit fit{g, *poly, poly->degree().value_or(0), d, h.truncation(),
                     guard};
  return fit;
}

std::vector<DenominatorFit> search_denominator(const TruncSeries& h,
                                               int max_rank, int guard) {
  std::vector<DenominatorFit> fits;
  for (const FiniteType& ft : all_finite_types(max_rank)) {
    if (h.truncation() < ft.positive_root_count() - 1 + guard) continue;
    if (auto fit = fit_denominator(h, ft, guard)) fits.push_back(*fit);
  }
  std::sort(fits.begin(), fits.end(),
            [](const DenominatorFit& a, const DenominatorFit& b) {
              if (a.positive_roots != b.positive_roots)
                return a.positive_roots < b.positive_roots;
              if (a.finite_type.family() != b.finite_type.family())
                return a.finite_type.family() < b.finite_type.family();
              return a.finite_type.rank() < b.finite_type.rank();
            });
  return fits;
}

RationalCheckResult rational_check(const RationalFunction& rf,
                                   const TruncSeries& target) {
  TruncSeries got = expand(rf, target.truncation());
  RationalCheckResult res;
  res.ok = true;
  for (int k = 0; k <= target.truncation(); ++k)
    if (got.coeff(k) != target.coeff(k)) {
      res.ok = false;
      res.first_mismatch = k;
      break;
    }
  return res;
}

}  // namespace weyl
