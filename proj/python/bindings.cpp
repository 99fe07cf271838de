/*
  bindings.cpp — pybind11 module exposing the core operations.

  Exact integers cross the boundary as Python ints (via decimal strings,
  so arbitrary precision survives); rational matrices come back as
  fractions.Fraction.
*/

#include "weyl/catalog.hpp"
#include "weyl/factor.hpp"
#include "weyl/files.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace weyl;

namespace {

py::object to_pyint(const Integer& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Integer to_integer(py::handle h) {
  return Integer(py::str(h).cast<std::string>());
}

py::list to_pylist(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_pyint(x));
  return out;
}

std::vector<Integer> coeff_vector(py::sequence seq) {
  std::vector<Integer> out;
  out.reserve(py::len(seq));
  for (py::handle h : seq) out.push_back(to_integer(h));
  return out;
}

TruncSeries as_series(py::sequence seq) {
  return TruncSeries(coeff_vector(seq));
}

IntPoly as_poly(py::sequence seq) { return IntPoly(coeff_vector(seq)); }

EnumOptions make_options(int workers, std::uint64_t max_elements,
                         std::uint64_t max_bytes) {
  EnumOptions opt;
  opt.workers = workers;
  if (max_elements) opt.max_elements = max_elements;
  opt.max_bytes = max_bytes;
  return opt;
}

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "growth series of Weyl groups of Kac-Moody algebras";

  py::register_exception<Error>(m, "WeylError", PyExc_RuntimeError);
  py::register_exception<NotGCM>(m, "NotGCMError", PyExc_ValueError);
  py::register_exception<Disconnected>(m, "DisconnectedError", PyExc_ValueError);
  py::register_exception<UnknownType>(m, "UnknownTypeError", PyExc_ValueError);
  py::register_exception<Singular>(m, "SingularError", PyExc_ValueError);
  py::register_exception<NonUnitConstant>(m, "NonUnitConstantError",
                                          PyExc_ValueError);
  py::register_exception<TruncationTooShallow>(m, "TruncationTooShallowError",
                                               PyExc_ValueError);
  py::register_exception<NotFinite>(m, "NotFiniteError", PyExc_RuntimeError);
  py::register_exception<LevelNotEnumerated>(m, "LevelNotEnumeratedError",
                                             PyExc_RuntimeError);
  py::register_exception<SchemaError>(m, "SchemaErrorException",
                                      PyExc_ValueError);

  py::class_<CartanMatrix>(m, "CartanMatrix")
      .def_property_readonly("rank", &CartanMatrix::rank)
      .def_property_readonly("cartan_class",
                             [](const CartanMatrix& m_) {
                               return to_string(m_.cartan_class());
                             })
      .def_property_readonly("hyperbolic", &CartanMatrix::hyperbolic)
      .def_property_readonly("labels", &CartanMatrix::labels)
      .def("entries", &CartanMatrix::entries)
      .def("__eq__", [](const CartanMatrix& a,
                        const CartanMatrix& b) { return a == b; })
      .def("__repr__", [](const CartanMatrix& m_) {
        return "CartanMatrix(rank=" + std::to_string(m_.rank()) + ", " +
               to_string(m_.cartan_class()) +
               (m_.hyperbolic() ? ", hyperbolic" : "") + ")";
      });

  m.def("validate_gcm", &validate_gcm, py::arg("matrix"),
        py::arg("labels") = std::vector<std::string>{},
        "Validate a generalized Cartan matrix and classify it.");
  m.def("determinant",
        [](const CartanMatrix& m_) { return to_pyint(determinant(m_)); });
  m.def("classify", [](const CartanMatrix& m_) {
    Classification c = classify(m_);
    return py::make_tuple(to_string(c.cartan_class), c.hyperbolic);
  });
  m.def("inverse_cartan", [](const CartanMatrix& m_) {
    RationalMatrix inv = inverse_cartan(m_);
    py::object F = fraction_type();
    py::list rows;
    for (int i = 0; i < inv.rows(); ++i) {
      py::list row;
      for (int j = 0; j < inv.cols(); ++j) {
        const Rational& r = inv.at(i, j);
        row.append(F(to_pyint(boost::multiprecision::numerator(r)),
                     to_pyint(boost::multiprecision::denominator(r))));
      }
      rows.append(row);
    }
    return rows;
  });
  m.def(
      "reflect",
      [](py::sequence coords, int i, const CartanMatrix& m_) {
        Weight w = reflect(Weight(coeff_vector(coords)), i, m_);
        return to_pylist(w.coords());
      },
      py::arg("coords"), py::arg("i"), py::arg("m"),
      "Apply the simple reflection at 0-based node i.");
  m.def("rho", [](int rank) {
    return to_pylist(Weight::rho(rank).coords());
  });

  m.def("finite_types", [](int max_rank) {
    std::vector<std::string> names;
    for (const FiniteType& ft : all_finite_types(max_rank))
      names.push_back(ft.name());
    return names;
  });
  m.def("degrees",
        [](const std::string& t) { return FiniteType::parse(t).degrees(); });
  m.def("positive_root_count", [](const std::string& t) {
    return FiniteType::parse(t).positive_root_count();
  });
  m.def("weyl_order", [](const std::string& t) {
    return to_pyint(FiniteType::parse(t).weyl_order());
  });
  m.def("finite_cartan",
        [](const std::string& t) { return FiniteType::parse(t).cartan(); });
  m.def("affine_cartan",
        [](const std::string& t) { return affine_cartan(FiniteType::parse(t)); });
  m.def("finite_poincare", [](const std::string& t) {
    return to_pylist(finite_poincare(FiniteType::parse(t)).coeffs());
  });
  m.def(
      "affine_poincare",
      [](const std::string& t, int order) {
        return to_pylist(affine_poincare(FiniteType::parse(t), order).coeffs());
      },
      py::arg("type"), py::arg("order"));

  m.def("series_mul", [](py::sequence a, py::sequence b) {
    return to_pylist(series_mul(as_series(a), as_series(b)).coeffs());
  });
  m.def("series_div", [](py::sequence a, py::sequence b) {
    return to_pylist(series_div(as_series(a), as_series(b)).coeffs());
  });
  m.def(
      "polynomial_terminates",
      [](py::sequence s, int guard) -> py::object {
        auto p = polynomial_terminates(as_series(s), guard);
        if (!p) return py::none();
        return to_pylist(p->coeffs());
      },
      py::arg("series"), py::arg("guard") = 1);
  m.def("display", [](py::sequence p) {
    return to_display_string(as_poly(p));
  });

  py::class_<GrowthSeries>(m, "GrowthSeries")
      .def_property_readonly("coeffs",
                             [](const GrowthSeries& g) { return g.coeffs; })
      .def_property_readonly("complete",
                             [](const GrowthSeries& g) { return g.complete; })
      .def_property_readonly(
          "budget_exceeded",
          [](const GrowthSeries& g) { return g.budget_exceeded; })
      .def_property_readonly("truncation", &GrowthSeries::truncation)
      .def("__repr__", [](const GrowthSeries& g) {
        return "GrowthSeries(" + std::to_string(g.coeffs.size()) +
               " coefficients" + (g.complete ? ", complete" : "") +
               (g.budget_exceeded ? ", budget exceeded" : "") + ")";
      });

  m.def(
      "growth_series",
      [](const CartanMatrix& m_, int order, int workers,
         std::uint64_t max_elements, std::uint64_t max_bytes) {
        return growth_series(m_, order,
                             make_options(workers, max_elements, max_bytes));
      },
      py::arg("m"), py::arg("order"), py::arg("workers") = 0,
      py::arg("max_elements") = 0, py::arg("max_bytes") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "parabolic_coset_growth",
      [](const CartanMatrix& m_, const NodeSet& J, int order, int workers,
         std::uint64_t max_elements, std::uint64_t max_bytes) {
        return parabolic_coset_growth(
            m_, J, order, make_options(workers, max_elements, max_bytes));
      },
      py::arg("m"), py::arg("J"), py::arg("order"), py::arg("workers") = 0,
      py::arg("max_elements") = 0, py::arg("max_bytes") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "finite_order",
      [](const CartanMatrix& m_, int depth_cap) {
        return finite_order(m_, {}, depth_cap);
      },
      py::arg("m"), py::arg("depth_cap") = 1024,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "reduced_words",
      [](const CartanMatrix& m_, int level, std::optional<NodeSet> filter,
         std::size_t limit) { return reduced_words(m_, level, filter, limit); },
      py::arg("m"), py::arg("level"), py::arg("filter") = py::none(),
      py::arg("limit") = SIZE_MAX);
  m.def("canonical_word", [](py::sequence coords, const CartanMatrix& m_) {
    return canonical_word(Weight(coeff_vector(coords)), m_);
  });

  m.def(
      "compute_R",
      [](py::sequence h, py::sequence sub, bool allow_negative) {
        return to_pylist(
            compute_R(as_series(h), as_series(sub), allow_negative).coeffs());
      },
      py::arg("h"), py::arg("sub"), py::arg("allow_negative") = false);

  py::class_<FactorizationReport>(m, "FactorizationReport")
      .def_readonly("ok", &FactorizationReport::pass)
      .def_readonly("first_mismatch", &FactorizationReport::first_mismatch)
      .def_property_readonly("full",
                             [](const FactorizationReport& r) { return r.full; })
      .def_property_readonly(
          "cosets", [](const FactorizationReport& r) { return r.cosets; })
      .def_property_readonly("parabolic_poincare",
                             [](const FactorizationReport& r) {
                               return to_pylist(r.parabolic_poincare.coeffs());
                             });
  m.def(
      "verify_factorization",
      [](const CartanMatrix& m_, const NodeSet& J, int order) {
        return verify_factorization(m_, J, order);
      },
      py::arg("m"), py::arg("J"), py::arg("order"));

  py::class_<DenominatorFit>(m, "DenominatorFit")
      .def_property_readonly(
          "g", [](const DenominatorFit& f) { return f.finite_type.name(); })
      .def_property_readonly(
          "q", [](const DenominatorFit& f) { return to_pylist(f.q.coeffs()); })
      .def_readonly("observed_degree", &DenominatorFit::observed_degree)
      .def_readonly("positive_roots", &DenominatorFit::positive_roots)
      .def_readonly("verified_to", &DenominatorFit::verified_to)
      .def_readonly("guard", &DenominatorFit::guard)
      .def("__repr__", [](const DenominatorFit& f) {
        return "DenominatorFit(" + f.finite_type.name() + ", Q = " +
               to_display_string(f.q) + ")";
      });
  m.def(
      "fit_denominator",
      [](py::sequence h, const std::string& g, int guard) {
        return fit_denominator(as_series(h), FiniteType::parse(g), guard);
      },
      py::arg("h"), py::arg("g"), py::arg("guard") = 1);
  m.def(
      "search_denominator",
      [](py::sequence h, int max_rank, int guard) {
        return search_denominator(as_series(h), max_rank, guard);
      },
      py::arg("h"), py::arg("max_rank"), py::arg("guard") = 1);
  m.def(
      "rational_check",
      [](py::sequence num, py::sequence den, py::sequence target) {
        auto res = rational_check({as_poly(num), as_poly(den)},
                                  as_series(target));
        return py::make_tuple(res.ok, res.first_mismatch);
      },
      py::arg("numerator"), py::arg("denominator"), py::arg("target"));

  py::class_<catalog::CatalogEntry>(m, "CatalogEntry")
      .def_readonly("id", &catalog::CatalogEntry::id)
      .def_readonly("name", &catalog::CatalogEntry::name)
      .def_readonly("cartan", &catalog::CatalogEntry::cartan)
      .def_readonly("alias_of", &catalog::CatalogEntry::alias_of)
      .def_property_readonly(
          "g",
          [](const catalog::CatalogEntry& e) { return e.finite_type.name(); })
      .def_property_readonly("q", [](const catalog::CatalogEntry& e) {
        return to_pylist(e.q.coeffs());
      });

  py::class_<catalog::VerificationReport>(m, "VerificationReport")
      .def_readonly("id", &catalog::VerificationReport::id)
      .def_property_readonly("status",
                             [](const catalog::VerificationReport& r) {
                               return catalog::to_string(r.status);
                             })
      .def_readonly("reason", &catalog::VerificationReport::reason)
      .def_readonly("depth_checked", &catalog::VerificationReport::depth_checked)
      .def_readonly("guard", &catalog::VerificationReport::guard)
      .def_readonly("seconds", &catalog::VerificationReport::seconds)
      .def_property_readonly(
          "q_computed",
          [](const catalog::VerificationReport& r) -> py::object {
            if (!r.q_computed) return py::none();
            return to_pylist(r.q_computed->coeffs());
          });

  m.def("load_catalog",
        [](std::optional<std::string> path) { return catalog::load_catalog(path); },
        py::arg("path") = py::none());
  m.def(
      "verify_entry",
      [](const catalog::CatalogEntry& e, int order, int guard, int workers) {
        EnumOptions opt;
        opt.workers = workers;
        return catalog::verify_entry(e, order, guard, opt);
      },
      py::arg("entry"), py::arg("order") = -1, py::arg("guard") = 1,
      py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("h48_cartan", &catalog::h48_cartan);
  m.def("paper_constants", []() {
    const auto& pc = catalog::paper_constants();
    py::dict d;
    d["h48_series"] = pc.h48_series;
    d["p_a4"] = to_pylist(pc.p_a4.coeffs());
    py::list f1;
    for (const auto& f : pc.r1_numerator_factors)
      f1.append(to_pylist(f.coeffs()));
    d["r1_numerator_factors"] = f1;
    d["r1_numerator"] = to_pylist(pc.r1_numerator.coeffs());
    d["r12_denominator"] = to_pylist(pc.r12_denominator.coeffs());
    d["r2_numerator"] = to_pylist(pc.r2_numerator.coeffs());
    d["r3_numerator"] = to_pylist(pc.r3_numerator.coeffs());
    d["r3_denominator"] = to_pylist(pc.r3_denominator.coeffs());
    d["r1_rep_counts"] = pc.r1_rep_counts;
    return d;
  });

  m.def("load_algebra_file", [](const std::string& path) {
    AlgebraDefinition def = load_algebra_file(path);
    return py::make_tuple(def.name, def.cartan);
  });
}
