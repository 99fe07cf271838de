/*
  acceptance.cpp — end-to-end acceptance suite.

  Runs each shipped claim at full depth and prints one PASS/FAIL line per
  criterion. Exit status is the number of failed criteria.
*/

#include "weyl/catalog.hpp"
#include "weyl/factor.hpp"
#include "weyl/files.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace weyl;

namespace {

class Runner {
 public:
  void criterion(const std::string& id, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << std::endl;
    failures_ += !ok;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count();
}

// Peak resident set in bytes, from /proc/self/status (Linux).
std::uint64_t peak_rss_bytes() {
  std::ifstream in("/proc/self/status");
  std::string key;
  while (in >> key) {
    if (key == "VmHWM:") {
      std::uint64_t kb;
      in >> kb;
      return kb * 1024;
    }
    in.ignore(4096, '\n');
  }
  return 0;
}

Weight apply_word(const std::vector<int>& word, const CartanMatrix& m) {
  Weight w = Weight::rho(m.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    w = reflect(w, *it, m);
  return w;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

int main() {
  Runner run;
  const CartanMatrix h48 = catalog::h48_cartan();
  const auto& pc = catalog::paper_constants();
  const TruncSeries h48_known = TruncSeries::from_uint64(pc.h48_series);

  // ---- 1: closed forms against the enumeration oracle, rank <= 6 ----
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = finite_poincare(FiniteType('A', 4)) ==
                  IntPoly::from_int64({1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1}) &&
              finite_poincare(FiniteType('A', 4)).eval(1) == 120;
    std::string bad;
    std::vector<std::pair<std::string, GrowthSeries>> completed;
    for (const FiniteType& ft : all_finite_types(6)) {
      GrowthSeries g = complete_growth(ft.cartan());
      IntPoly p = finite_poincare(ft);
      bool same = g.complete && g.coeffs.size() == p.coeffs().size();
      if (same)
        for (size_t k = 0; k < g.coeffs.size(); ++k)
          same &= Integer(g.coeffs[k]) == p.coeffs()[k];
      if (!same) {
        ok = false;
        bad += " " + ft.name();
      }
      completed.emplace_back(ft.name(), std::move(g));
    }
    double secs = seconds_since(t0);
    ok = ok && secs < 30.0;
    std::ostringstream d;
    d << "finite closed forms = BFS for " << completed.size()
      << " types of rank <= 6 in " << std::fixed << std::setprecision(2)
      << secs << " s" << (bad.empty() ? "" : "; mismatches:" + bad);
    run.criterion("1", ok, d.str());

    // ---- 8a: palindromicity of every completed series ----
    bool pal = true;
    for (const auto& [name, g] : completed) {
      size_t t = g.coeffs.size() - 1;
      pal &= g.coeffs[t] == 1;
      for (size_t k = 0; k <= t; ++k) pal &= g.coeffs[k] == g.coeffs[t - k];
    }
    run.criterion("8a", pal,
                  "completed finite series are palindromic with top "
                  "coefficient 1");
  }

  // ---- 2: the rank-6 growth series to order 25 ----
  GrowthSeries h48_growth;
  {
    auto t0 = std::chrono::steady_clock::now();
    EnumOptions seq;
    seq.workers = 1;
    h48_growth = growth_series(h48, 25, seq);
    double secs = seconds_since(t0);
    bool ok = h48_growth.coeffs == pc.h48_series && !h48_growth.complete &&
              !h48_growth.budget_exceeded;

    EnumOptions par;  // all cores
    GrowthSeries again = growth_series(h48, 25, par);
    bool det = again.coeffs == h48_growth.coeffs;

    std::uint64_t rss = peak_rss_bytes();
    bool mem_ok = rss < (std::uint64_t(4) << 30);
    std::ostringstream d;
    d << "26 coefficients exact (t^25 = " << h48_growth.coeffs[25] << ") in "
      << std::fixed << std::setprecision(2) << secs
      << " s, peak rss " << rss / (1024 * 1024) << " MiB, deterministic across "
      << "worker counts " << (det ? "yes" : "NO");
    run.criterion("2", ok && det && mem_ok && secs < 600.0, d.str());
  }

  // ---- 3: the central denominator fit ----
  {
    auto fit = fit_denominator(h48_known, FiniteType('B', 5), 1);
    const IntPoly q48 = catalog::load_catalog()[47].q;
    bool ok = fit.has_value() && fit->q == q48 && fit->positive_roots == 25 &&
              fit->observed_degree == 24;
    auto fits = search_denominator(h48_known, 5, 1);
    bool found = false;
    for (const auto& f : fits)
      found |= f.finite_type.name() == "B5" && f.q == q48;
    std::ostringstream d;
    d << "P(B5)/P(H) terminates: degree "
      << (fit ? std::to_string(fit->observed_degree) : "none")
      << " = D-1, polynomial matches the table; search over rank <= 5 finds "
      << fits.size() << " fit(s) including B5";
    run.criterion("3", ok && found, d.str());
  }

  // ---- 4: the parabolic story ----
  {
    GrowthSeries cosets = parabolic_coset_growth(h48, {0, 1, 2, 3}, 6);
    bool counts_ok =
        cosets.coeffs == std::vector<std::uint64_t>{1, 2, 3, 7, 12, 19, 32};

    FactorizationReport a4 = verify_factorization(h48, {0, 1, 2, 3}, 25);
    FactorizationReport d5 = verify_factorization(h48, {0, 1, 2, 3, 4}, 25);
    bool conv_ok = a4.pass && d5.pass &&
                   a4.parabolic_poincare == finite_poincare(FiniteType('A', 4)) &&
                   d5.parabolic_poincare == finite_poincare(FiniteType('D', 5));

    auto words = reduced_words(h48, 2, NodeSet{0, 1, 2, 3});
    std::set<std::vector<Integer>> got, expect;
    for (const auto& w : words) got.insert(apply_word(w, h48).coords());
    for (const std::vector<int>& w : {std::vector<int>{4, 2}, {4, 5}, {5, 2}})
      expect.insert(apply_word(w, h48).coords());
    bool images_ok = got == expect;

    std::ostringstream d;
    d << "coset counts " << join(cosets.coeffs)
      << "; convolution identity holds to order 25 for both parabolics; "
         "level-2 representatives match the listing";
    run.criterion("4", counts_ok && conv_ok && images_ok, d.str());
  }

  // ---- 5: the printed rational functions ----
  {
    TruncSeries r1 = compute_R(h48_known, pc.p_a4);
    TruncSeries r2 = compute_R(h48_known, finite_poincare(FiniteType('D', 5)));
    TruncSeries r3 = compute_R(h48_known, affine_poincare(FiniteType('D', 4), 25));
    auto c1 = rational_check({pc.r1_numerator, pc.r12_denominator}, r1);
    auto c2 = rational_check({pc.r2_numerator, pc.r12_denominator}, r2);
    auto c3 = rational_check({pc.r3_numerator, pc.r3_denominator}, r3);
    std::ostringstream d;
    d << "R1, R2 (shared denominator) and R3 reproduce the computed "
         "quotients to order 25 with zero mismatches";
    run.criterion("5", c1.ok && c2.ok && c3.ok, d.str());
  }

  // ---- 6: classification ----
  {
    bool a2 = validate_gcm({{2, -1}, {-1, 2}}).cartan_class() ==
              CartanClass::Finite;
    CartanMatrix d4hat = affine_cartan(FiniteType('D', 4));
    bool aff = d4hat.cartan_class() == CartanClass::Affine &&
               determinant(d4hat) == 0;
    bool hyp = h48.cartan_class() == CartanClass::Indefinite &&
               h48.hyperbolic();
    bool deletions = true;
    for (int del = 0; del < 6 && deletions; ++del) {
      std::vector<int> rest;
      for (int i = 0; i < 6; ++i)
        if (i != del) rest.push_back(i);
      IntMatrix sub = principal_submatrix(h48, rest);
      for (const auto& comp : connected_components(sub)) {
        IntMatrix block(comp.size(), std::vector<std::int64_t>(comp.size()));
        for (size_t a = 0; a < comp.size(); ++a)
          for (size_t b = 0; b < comp.size(); ++b)
            block[a][b] = sub[comp[a]][comp[b]];
        deletions &= validate_gcm(block).cartan_class() !=
                     CartanClass::Indefinite;
      }
    }
    run.criterion("6", a2 && aff && hyp && deletions,
                  "A2 Finite; affinized D4 Affine with det 0; the rank-6 "
                  "matrix Indefinite and hyperbolic, all node deletions "
                  "finite or affine");
  }

  // ---- 7: catalog integrity and end-to-end verification ----
  {
    auto entries = catalog::load_catalog();
    bool ok = entries.size() == 48;
    int aliased = 0;
    for (const auto& e : entries) {
      ok &= e.q.coeff(0) == 1;
      if (e.alias_of) {
        ++aliased;
        ok &= *e.alias_of < e.id && entries[*e.alias_of - 1].q == e.q;
      }
    }
    ok &= aliased == 16;
    auto rep48 = catalog::verify_entry(entries[47]);  // default depth D+1 = 26
    ok &= rep48.status == catalog::VerifyStatus::Verified;
    auto rep7 = catalog::verify_entry(entries[6]);
    ok &= rep7.status == catalog::VerifyStatus::MatrixUnavailable;
    std::ostringstream d;
    d << "48 polynomials load, 16 aliases resolve; entry 48 Verified at "
         "depth " << rep48.depth_checked << " in " << std::fixed
      << std::setprecision(2) << rep48.seconds
      << " s; matrix-less entries report MatrixUnavailable";
    run.criterion("7", ok, d.str());
  }

  // ---- conditional: externally transcribed rank-3 entry ----
  {
    auto entries = catalog::load_catalog(std::string(WEYL_TEST_DATA_DIR) +
                                         "/rank3_external.json");
    auto rep = catalog::verify_entry(entries[23]);
    std::ostringstream d;
    d << "external rank-3 matrix for entry 24 verifies ("
      << catalog::to_string(rep.status) << ")";
    run.criterion("7-external", rep.status == catalog::VerifyStatus::Verified,
                  d.str());
  }

  // ---- 8b: series division round trip, 1000 random unit pairs ----
  {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len(0, 16);
    std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
    std::uniform_int_distribution<int> sign(0, 1);
    auto random_unit = [&] {
      std::vector<Integer> c{Integer(sign(rng) ? 1 : -1)};
      int n = len(rng);
      for (int i = 0; i < n; ++i) c.emplace_back(coeff(rng));
      return IntPoly(std::move(c));
    };
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      IntPoly p = random_unit();
      IntPoly q = random_unit();
      TruncSeries ps = TruncSeries::from_poly(p, 32);
      TruncSeries qs = TruncSeries::from_poly(q, 32);
      ok &= series_div(series_mul(ps, qs), ps) == qs;
    }
    run.criterion("8b", ok,
                  "series_div(series_mul(p,q), p) = q for 1000 random "
                  "unit-constant pairs");
  }

  // ---- 8c: image uniqueness across levels at small rank ----
  {
    bool ok = true;
    for (const IntMatrix& raw :
         {IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
          IntMatrix{{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}},
          IntMatrix{{2, -1, -1, -1}, {-1, 2, -1, -1}, {-1, -1, 2, -1},
                    {-1, -1, -1, 2}}}) {
      CartanMatrix m = validate_gcm(raw);
      const int depth = m.rank() == 4 ? 7 : 10;
      std::set<std::vector<Integer>> all;
      for (int k = 0; k <= depth; ++k) {
        Enumeration e = enumerate_levels(m, k, std::nullopt, k);
        if (static_cast<int>(e.full.coeffs.size()) <= k) break;
        for (const auto& img : e.level_images) ok &= all.insert(img).second;
      }
    }
    run.criterion("8c", ok,
                  "rho-orbit images are globally unique across levels "
                  "(exhaustive hash check at rank <= 4)");
  }

  std::cout << (run.failures() == 0 ? "ALL CRITERIA PASSED"
                                    : "FAILURES: " +
                                          std::to_string(run.failures()))
            << std::endl;
  return run.failures();
}
