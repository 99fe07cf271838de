#include "weyl/catalog.hpp"

#include "weyl/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace weyl {
namespace catalog {

using nlohmann::json;

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return "Verified";
    case VerifyStatus::MatrixUnavailable: return "MatrixUnavailable";
    case VerifyStatus::Mismatch: return "Mismatch";
  }
  return "?";
}

namespace {

IntPoly poly_from_json(const json& arr) {
  std::vector<Integer> c;
  for (const auto& v : arr) c.emplace_back(v.get<std::int64_t>());
  return IntPoly(std::move(c));
}

IntMatrix matrix_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw SchemaError(where + ": 'cartan' must be a non-empty array of rows");
  IntMatrix m;
  for (const auto& row : arr) {
    if (!row.is_array())
      throw SchemaError(where + ": 'cartan' rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw SchemaError(where + ": 'cartan' entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<CatalogEntry> build_builtin() {
  json root = json::parse(embedded_json());
  std::vector<CatalogEntry> entries;
  entries.reserve(48);
  for (const auto& je : root.at("entries")) {
    int id = je.at("id").get<int>();
    FiniteType g = FiniteType::parse(je.at("g").get<std::string>());
    CatalogEntry e{id, "H" + std::to_string(id), std::nullopt, g, IntPoly(),
                   std::nullopt};
    if (je.contains("q_of")) {
      int target = je.at("q_of").get<int>();
      if (target >= id)
        throw Error("catalog data: alias target must precede entry " +
                    std::to_string(id));
      const CatalogEntry& t = entries.at(target - 1);
      if (t.id != target || t.finite_type != g)
        throw Error("catalog data: bad alias for entry " + std::to_string(id));
      e.q = t.q;
      e.alias_of = target;
    } else {
      e.q = poly_from_json(je.at("q"));
    }
    if (e.q.coeff(0) != 1)
      throw Error("catalog data: entry " + std::to_string(id) +
                  " has constant term != 1");
    if (je.contains("cartan"))
      e.cartan = validate_gcm(matrix_from_json(je.at("cartan"), e.name));
    if (static_cast<int>(entries.size()) + 1 != id)
      throw Error("catalog data: ids must be 1..48 in order");
    entries.push_back(std::move(e));
  }
  if (entries.size() != 48) throw Error("catalog data: expected 48 entries");
  return entries;
}

}  // namespace

void apply_overrides(std::vector<CatalogEntry>& entries,
                     const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw SchemaError(std::string("override file: ") + ex.what());
  }
  if (!root.is_array())
    throw SchemaError("override file: top level must be an array of records");
  int index = 0;
  for (const auto& rec : root) {
    ++index;
    std::ostringstream who;
    who << "override record " << index;
    if (!rec.is_object()) throw SchemaError(who.str() + ": must be an object");
    if (!rec.contains("id") || !rec.at("id").is_number_integer())
      throw SchemaError(who.str() + ": missing integer field 'id'");
    int id = rec.at("id").get<int>();
    if (id < 1 || id > 48)
      throw SchemaError(who.str() + ": id must be 1..48");
    if (!rec.contains("cartan"))
      throw SchemaError(who.str() + ": missing field 'cartan'");
    IntMatrix m = matrix_from_json(rec.at("cartan"), who.str());
    if (rec.contains("rank") &&
        rec.at("rank").get<int>() != static_cast<int>(m.size()))
      throw SchemaError(who.str() + ": 'rank' does not match matrix size");
    CartanMatrix cm = [&] {
      try {
        return validate_gcm(m);
      } catch (const Error& ex) {
        throw SchemaError(who.str() + ": " + ex.what());
      }
    }();
    if (!cm.hyperbolic())
      throw SchemaError(who.str() + ": matrix classifies as " +
                        weyl::to_string(cm.cartan_class()) +
                        " and is not hyperbolic");
    entries.at(id - 1).cartan = std::move(cm);
    if (rec.contains("name") && rec.at("name").is_string())
      entries.at(id - 1).name = rec.at("name").get<std::string>();
  }
}

std::vector<CatalogEntry> load_catalog(
    const std::optional<std::string>& override_path) {
  std::vector<CatalogEntry> entries = build_builtin();
  if (override_path) {
    std::ifstream in(*override_path);
    if (!in) throw SchemaError("cannot open override file " + *override_path);
    std::stringstream buf;
    buf << in.rdbuf();
    apply_overrides(entries, buf.str());
  }
  return entries;
}

VerificationReport verify_entry(const CatalogEntry& e, int max_order,
                                int guard, const EnumOptions& opt) {
  VerificationReport rep;
  rep.id = e.id;
  rep.guard = guard;
  if (!e.cartan) {
    rep.status = VerifyStatus::MatrixUnavailable;
    rep.reason = "no Cartan matrix available for " + e.name;
    return rep;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const int d = e.finite_type.positive_root_count();
  if (max_order < 0) max_order = d + guard;
  rep.depth_checked = max_order;

  GrowthSeries g = growth_series(*e.cartan, max_order, opt);
  auto done = [&](VerifyStatus st, std::string reason) {
    rep.status = st;
    rep.reason = std::move(reason);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    rep.seconds = dt.count();
    return rep;
  };
  if (g.budget_exceeded)
    return done(VerifyStatus::Mismatch,
                "enumeration budget exceeded at level " +
                    std::to_string(g.truncation()));
  if (g.complete)
    return done(VerifyStatus::Mismatch,
                "Weyl group is finite; entry is not hyperbolic data");

  std::optional<DenominatorFit> fit;
  try {
    fit = fit_denominator(to_series(g), e.finite_type, guard);
  } catch (const TruncationTooShallow& ex) {
    return done(VerifyStatus::Mismatch, ex.what());
  }
  if (!fit)
    return done(VerifyStatus::Mismatch,
                "P(" + e.finite_type.name() +
                    ")/P(H) does not terminate within guard " +
                    std::to_string(guard) + " at depth " +
                    std::to_string(max_order));
  rep.q_computed = fit->q;
  if (fit->observed_degree + 1 < static_cast<std::size_t>(d) ||
      fit->observed_degree > static_cast<std::size_t>(d))
    return done(VerifyStatus::Mismatch,
                "computed degree " + std::to_string(fit->observed_degree) +
                    " outside {D-1, D} for D = " + std::to_string(d));
  if (fit->q != e.q)
    return done(VerifyStatus::Mismatch,
                "computed polynomial differs from catalog: " +
                    to_display_string(fit->q));
  return done(VerifyStatus::Verified, "");
}

namespace {

PaperConstants build_constants() {
  json root = json::parse(embedded_json());
  const json& h = root.at("h48");
  PaperConstants pc;
  for (const auto& v : h.at("series"))
    pc.h48_series.push_back(v.get<std::uint64_t>());
  pc.p_a4 = poly_from_json(h.at("p_a4"));
  for (const auto& f : h.at("r1_numerator_factors"))
    pc.r1_numerator_factors.push_back(poly_from_json(f));
  pc.r1_numerator = IntPoly::one();
  for (const auto& f : pc.r1_numerator_factors)
    pc.r1_numerator = pc.r1_numerator * f;
  pc.r12_denominator = poly_from_json(h.at("r12_denominator"));
  pc.r2_numerator = poly_from_json(h.at("r2_numerator"));
  for (const auto& f : h.at("r3_numerator_factors"))
    pc.r3_numerator_factors.push_back(poly_from_json(f));
  pc.r3_numerator = IntPoly::one();
  for (const auto& f : pc.r3_numerator_factors)
    pc.r3_numerator = pc.r3_numerator * f;
  pc.r3_denominator = poly_from_json(h.at("r3_denominator"));
  for (const auto& v : h.at("r1_rep_counts"))
    pc.r1_rep_counts.push_back(v.get<std::uint64_t>());
  return pc;
}

}  // namespace

const PaperConstants& paper_constants() {
  static const PaperConstants pc = build_constants();
  return pc;
}

CartanMatrix h48_cartan() {
  static const CartanMatrix m = [] {
    auto entries = build_builtin();
    return *entries.at(47).cartan;
  }();
  return m;
}

}  // namespace catalog
}  // namespace weyl
