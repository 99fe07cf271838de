#include "weyl/factor.hpp"

#include "weyl/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace weyl;

namespace {

TruncSeries h48_paper_series() {
  return TruncSeries::from_uint64(catalog::paper_constants().h48_series);
}

}  // namespace

TEST_CASE("compute_R") {
  TruncSeries pa4 =
      TruncSeries::from_poly(finite_poincare(FiniteType('A', 4)), 12);
  SUBCASE("self-quotient is 1") {
    TruncSeries r = compute_R(pa4, pa4);
    CHECK(r == TruncSeries::from_poly(IntPoly::one(), 12));
  }
  SUBCASE("the big series over P(A4) gives the representative counts") {
    TruncSeries r =
        compute_R(h48_paper_series(), finite_poincare(FiniteType('A', 4)));
    for (int k = 0; k < 7; ++k)
      CHECK(r.coeff(k) ==
            Integer(catalog::paper_constants().r1_rep_counts[k]));
  }
  SUBCASE("negative coefficients are a diagnosis, not a crash, when asked") {
    IntPoly bad = IntPoly::from_int64({1, 3});
    bool threw = false;
    try {
      compute_R(h48_paper_series(), bad);
    } catch (const NegativeCoefficient& ex) {
      threw = true;
      CHECK(ex.order > 0);
    }
    CHECK(threw);
    CHECK_NOTHROW(compute_R(h48_paper_series(), bad, true));
  }
}

TEST_CASE("verify_factorization") {
  CartanMatrix h48 = catalog::h48_cartan();
  SUBCASE("A4 parabolic") {
    FactorizationReport rep = verify_factorization(h48, {0, 1, 2, 3}, 6);
    CHECK(rep.pass);
    CHECK(!rep.first_mismatch.has_value());
    CHECK(rep.parabolic_poincare == finite_poincare(FiniteType('A', 4)));
    CHECK(rep.cosets.coeffs ==
          std::vector<std::uint64_t>{1, 2, 3, 7, 12, 19, 32});
  }
  SUBCASE("D5 parabolic") {
    FactorizationReport rep = verify_factorization(h48, {0, 1, 2, 3, 4}, 10);
    CHECK(rep.pass);
    CHECK(rep.parabolic_poincare == finite_poincare(FiniteType('D', 5)));
  }
  SUBCASE("disconnected J multiplies component polynomials") {
    // nodes 1 and 4 (0-based 0 and 3) are not adjacent: W_J = A1 x A1
    FactorizationReport rep = verify_factorization(h48, {0, 3}, 6);
    CHECK(rep.pass);
    CHECK(rep.parabolic_poincare == IntPoly::from_int64({1, 2, 1}));
  }
  SUBCASE("empty J passes trivially") {
    FactorizationReport rep = verify_factorization(h48, {}, 5);
    CHECK(rep.pass);
    CHECK(rep.parabolic_poincare == IntPoly::one());
  }
  SUBCASE("affine subdiagram is rejected") {
    // deleting node 1 leaves the affine star on the rest
    CHECK_THROWS_AS(verify_factorization(h48, {1, 2, 3, 4, 5}, 4), NotFinite);
  }
}

TEST_CASE("fit_denominator") {
  TruncSeries h = h48_paper_series();
  SUBCASE("B5 fit reproduces the catalog polynomial") {
    auto fit = fit_denominator(h, FiniteType('B', 5), 1);
    REQUIRE(fit.has_value());
    CHECK(fit->q == catalog::load_catalog()[47].q);
    CHECK(fit->observed_degree == 24);
    CHECK(fit->positive_roots == 25);
    CHECK(fit->verified_to == 25);
    // the defining identity, rechecked by multiplication
    TruncSeries back =
        series_mul(TruncSeries::from_poly(fit->q, 25), h);
    CHECK(back ==
          TruncSeries::from_poly(finite_poincare(FiniteType('B', 5)), 25));
  }
  SUBCASE("A2 fits itself with Q = 1") {
    TruncSeries self =
        TruncSeries::from_poly(finite_poincare(FiniteType('A', 2)), 6);
    auto fit = fit_denominator(self, FiniteType('A', 2), 1);
    REQUIRE(fit.has_value());
    CHECK(fit->q == IntPoly::one());
    CHECK(fit->observed_degree == 0);
  }
  SUBCASE("A5 is a negative control") {
    CHECK(!fit_denominator(h, FiniteType('A', 5), 1).has_value());
  }
  SUBCASE("shallow series is refused") {
    CHECK_THROWS_AS(fit_denominator(h.truncated(10), FiniteType('B', 5), 1),
                    TruncationTooShallow);
    CHECK_THROWS_AS(fit_denominator(h, FiniteType('B', 5), 2),
                    TruncationTooShallow);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(
        fit_denominator(TruncSeries::from_int64({2, 1, 1}), FiniteType('A', 1), 1),
        Error);
  }
}

TEST_CASE("search_denominator") {
  SUBCASE("finds the B5 fit in the big series") {
    auto fits = search_denominator(h48_paper_series(), 5, 1);
    bool found = false;
    for (const auto& f : fits)
      if (f.finite_type.name() == "B5") {
        found = true;
        CHECK(f.q == catalog::load_catalog()[47].q);
      }
    CHECK(found);
    // sorted by (positive roots, family, rank)
    for (size_t i = 1; i < fits.size(); ++i)
      CHECK(fits[i - 1].positive_roots <= fits[i].positive_roots);
    // every reported fit satisfies Q * h = P(G) through the truncation
    for (const auto& f : fits) {
      TruncSeries lhs = series_mul(TruncSeries::from_poly(f.q, f.verified_to),
                                   h48_paper_series());
      CHECK(lhs == TruncSeries::from_poly(finite_poincare(f.finite_type),
                                          f.verified_to));
    }
  }
  SUBCASE("a finite polynomial fits itself") {
    TruncSeries g2 =
        TruncSeries::from_poly(finite_poincare(FiniteType('G', 2)), 12);
    auto fits = search_denominator(g2, 2, 1);
    bool self = false;
    for (const auto& f : fits)
      if (f.finite_type.name() == "G2" && f.q == IntPoly::one()) self = true;
    CHECK(self);
  }
  SUBCASE("geometric series against the brute-force divisor oracle") {
    // h = 1/(1-t): Q must be exactly P(G) * (1-t), which is a polynomial
    // of degree D+1; a fit is reportable iff that degree stays below the
    // guard window. The oracle multiplies instead of dividing.
    const int t = 20, guard = 1;
    TruncSeries geo(std::vector<Integer>(t + 1, Integer(1)));
    auto fits = search_denominator(geo, 8, guard);
    std::set<std::string> got;
    for (const auto& f : fits) got.insert(f.finite_type.name());
    std::set<std::string> expect;
    for (const FiniteType& ft : all_finite_types(8)) {
      int d = ft.positive_root_count();
      if (d - 1 + guard > t) continue;  // not eligible at this truncation
      IntPoly q = finite_poincare(ft) * IntPoly::from_int64({1, -1});
      if (static_cast<int>(q.degree().value()) <= t - guard) {
        TruncSeries prod = series_mul(TruncSeries::from_poly(q, t), geo);
        REQUIRE(prod == TruncSeries::from_poly(finite_poincare(ft), t));
        expect.insert(ft.name());
      }
    }
    CHECK(got == expect);
    CHECK(!expect.empty());
  }
}

TEST_CASE("rational_check against the printed displays") {
  const auto& pc = catalog::paper_constants();
  TruncSeries h = h48_paper_series();
  SUBCASE("R1") {
    TruncSeries r1 = compute_R(h, pc.p_a4);
    RationalCheckResult res =
        rational_check({pc.r1_numerator, pc.r12_denominator}, r1);
    CHECK(res.ok);
    CHECK(!res.first_mismatch.has_value());
  }
  SUBCASE("R2 shares the denominator") {
    TruncSeries r2 = compute_R(h, finite_poincare(FiniteType('D', 5)));
    CHECK(rational_check({pc.r2_numerator, pc.r12_denominator}, r2).ok);
  }
  SUBCASE("R3 against the affine quotient") {
    TruncSeries r3 = compute_R(h, affine_poincare(FiniteType('D', 4), 25));
    CHECK(rational_check({pc.r3_numerator, pc.r3_denominator}, r3).ok);
  }
  SUBCASE("trivial display") {
    TruncSeries one = TruncSeries::from_poly(IntPoly::one(), 8);
    CHECK(rational_check({IntPoly::one(), IntPoly::one()}, one).ok);
  }
  SUBCASE("a mismatch reports its first order") {
    TruncSeries wrong = TruncSeries::from_int64({1, 1, 2, 0});
    RationalCheckResult res =
        rational_check({IntPoly::one(), IntPoly::from_int64({1, -1})}, wrong);
    CHECK(!res.ok);
    CHECK(res.first_mismatch == 2);
  }
}

TEST_CASE("expand rational functions") {
  TruncSeries s = expand({IntPoly::one(), IntPoly::from_int64({1, -1})}, 6);
  CHECK(s == TruncSeries::from_int64({1, 1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(expand({IntPoly::one(), IntPoly::from_int64({2, 1})}, 3),
                  NonUnitConstant);
}
