/*
  main.cpp — the weylgrowth command line tool.

  Data goes to stdout in one of three formats (plain, records = line
  delimited JSON, csv); progress and diagnostics go to stderr. Node
  indices on the command line are 1-based, matching diagram labels.
*/

#include "weyl/catalog.hpp"
#include "weyl/factor.hpp"
#include "weyl/files.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace weyl;
using nlohmann::json;

namespace {

enum class Format { Plain, Records, Csv };

struct Common {
  std::string algebra;
  std::string file;
  Format format = Format::Plain;
  int workers = 0;
  std::uint64_t max_elements = 0;  // 0 = library default
};

void add_format_option(CLI::App* cmd, Format& fmt) {
  cmd->add_option("--format", fmt, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"plain", Format::Plain},
                                        {"records", Format::Records},
                                        {"csv", Format::Csv}},
          CLI::ignore_case));
}

void add_source_options(CLI::App* cmd, Common& c) {
  auto* a = cmd->add_option("--algebra", c.algebra,
                            "built-in name: A1..E8, F4, G2, affine:<type>, H48");
  auto* f = cmd->add_option("--file", c.file, "algebra definition JSON file");
  a->excludes(f);
  f->excludes(a);
  add_format_option(cmd, c.format);
}

void add_engine_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--workers", c.workers,
                  "enumeration worker threads (default: all cores, 1 = "
                  "sequential baseline)");
  cmd->add_option("--max-elements", c.max_elements,
                  "stop enumeration past this many stored vectors");
}

EnumOptions engine_options(const Common& c) {
  EnumOptions opt;
  opt.workers = c.workers;
  if (c.max_elements) opt.max_elements = c.max_elements;
  if (const char* env = std::getenv("WEYLGROWTH_MAX_BYTES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opt.max_bytes = v;
  }
  return opt;
}

struct Source {
  std::string name;
  CartanMatrix cartan;
};

Source resolve_source(const Common& c) {
  if (!c.file.empty()) {
    AlgebraDefinition def = load_algebra_file(c.file);
    return {def.name.empty() ? c.file : def.name, def.cartan};
  }
  if (c.algebra.empty())
    throw Error("one of --algebra or --file is required");
  const std::string& s = c.algebra;
  if (s == "H48" || s == "h48") return {"H48", catalog::h48_cartan()};
  if (s.size() > 1 && (s[0] == 'H' || s[0] == 'h'))
    throw Error(s + " has no built-in matrix; supply it with --file");
  if (s.rfind("affine:", 0) == 0) {
    FiniteType ft = FiniteType::parse(s.substr(7));
    return {s, affine_cartan(ft)};
  }
  FiniteType ft = FiniteType::parse(s);
  return {ft.name(), ft.cartan()};
}

// Integers from series arithmetic can outgrow JSON's exact number range.
json json_int(const Integer& v) {
  static const Integer lo("-9007199254740991"), hi("9007199254740991");
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

json json_coeffs(const std::vector<Integer>& c) {
  json arr = json::array();
  for (const auto& v : c) arr.push_back(json_int(v));
  return arr;
}

json json_coeffs(const IntPoly& p) { return json_coeffs(p.coeffs()); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------- classify ----------------

int cmd_classify(const Common& c) {
  Source src = resolve_source(c);
  Classification cls = classify(src.cartan);
  Integer det = determinant(src.cartan);
  switch (c.format) {
    case Format::Plain:
      std::cout << "name: " << src.name << "\n"
                << "rank: " << src.cartan.rank() << "\n"
                << "class: " << to_string(cls.cartan_class) << "\n"
                << "hyperbolic: " << (cls.hyperbolic ? "true" : "false") << "\n"
                << "determinant: " << det << "\n";
      break;
    case Format::Records:
      emit(json{{"name", src.name},
                {"rank", src.cartan.rank()},
                {"class", to_string(cls.cartan_class)},
                {"hyperbolic", cls.hyperbolic},
                {"determinant", json_int(det)}});
      break;
    case Format::Csv:
      std::cout << "name,rank,class,hyperbolic,determinant\n"
                << src.name << "," << src.cartan.rank() << ","
                << to_string(cls.cartan_class) << ","
                << (cls.hyperbolic ? "true" : "false") << "," << det << "\n";
      break;
  }
  return 0;
}

// ---------------- growth / cosets ----------------

int run_growth(const Common& c, const std::optional<NodeSet>& J, int order,
               const std::string& checkpoint_path) {
  Source src = resolve_source(c);
  if (J)
    for (int v : *J)
      if (v < 0 || v >= src.cartan.rank())
        throw Error("--J node index out of range 1.." +
                    std::to_string(src.cartan.rank()));

  std::ofstream checkpoint;
  if (!checkpoint_path.empty()) {
    checkpoint.open(checkpoint_path);
    if (!checkpoint)
      throw Error("cannot open checkpoint file " + checkpoint_path);
  }

  EnumOptions opt = engine_options(c);
  if (c.format == Format::Csv) std::cout << "level,coefficient,frontier\n";
  opt.on_level = [&](const LevelRecord& r) {
    switch (c.format) {
      case Format::Plain:
        std::cout << "order " << r.level << ": " << r.coefficient << "\n";
        break;
      case Format::Records:
        emit(json{{"event", "level"},
                  {"level", r.level},
                  {"coefficient", r.coefficient},
                  {"frontier", r.frontier_size}});
        break;
      case Format::Csv:
        std::cout << r.level << "," << r.coefficient << "," << r.frontier_size
                  << "\n";
        break;
    }
    if (checkpoint.is_open()) {
      checkpoint << json{{"level", r.level},
                         {"coefficient", r.coefficient},
                         {"frontier", r.frontier_size},
                         {"elapsed", r.elapsed_seconds}}
                        .dump()
                 << "\n"
                 << std::flush;
    }
    std::cerr << "level " << r.level << " done, frontier " << r.frontier_size
              << " (" << r.elapsed_seconds << " s)\r";
  };

  Enumeration e = enumerate_levels(src.cartan, order, J, -1, opt);
  std::cerr << "\n";
  const GrowthSeries& g = J ? e.filtered : e.full;

  switch (c.format) {
    case Format::Plain: {
      std::cout << "series: " << to_coeff_string(to_series(g)) << "\n"
                << "complete: " << (g.complete ? "true" : "false") << "\n";
      if (g.budget_exceeded)
        std::cout << "budget_exceeded: true (series truncated at order "
                  << g.truncation() << ")\n";
      break;
    }
    case Format::Records: {
      json sum{{"event", "summary"},
               {"series", g.coeffs},
               {"complete", g.complete},
               {"budget_exceeded", g.budget_exceeded}};
      emit(sum);
      break;
    }
    case Format::Csv:
      break;
  }
  return 0;
}

// ---------------- poincare ----------------

int cmd_poincare(const Common& c, const std::string& type, int order) {
  if (type.rfind("affine:", 0) == 0) {
    FiniteType ft = FiniteType::parse(type.substr(7));
    if (order < 0) throw Error("--order is required for affine types");
    TruncSeries s = affine_poincare(ft, order);
    switch (c.format) {
      case Format::Plain:
        std::cout << "P(" << type << ") = " << to_display_string(s) << "\n"
                  << "coefficients: " << to_coeff_string(s) << "\n";
        break;
      case Format::Records:
        emit(json{{"type", type},
                  {"order", order},
                  {"coefficients", json_coeffs(s.coeffs())}});
        break;
      case Format::Csv: {
        std::cout << "degree,coefficient\n";
        for (int k = 0; k <= s.truncation(); ++k)
          std::cout << k << "," << s.coeff(k) << "\n";
        break;
      }
    }
    return 0;
  }
  FiniteType ft = FiniteType::parse(type);
  IntPoly p = finite_poincare(ft);
  switch (c.format) {
    case Format::Plain:
      std::cout << "P(" << ft.name() << ") = " << to_display_string(p) << "\n"
                << "coefficients: " << to_coeff_string(p) << "\n"
                << "weyl_order: " << ft.weyl_order() << "\n";
      break;
    case Format::Records:
      emit(json{{"type", ft.name()},
                {"degree", p.degree() ? json(*p.degree()) : json()},
                {"weyl_order", json_int(ft.weyl_order())},
                {"coefficients", json_coeffs(p)}});
      break;
    case Format::Csv: {
      std::cout << "degree,coefficient\n";
      const auto& coeffs = p.coeffs();
      for (size_t k = 0; k < coeffs.size(); ++k)
        std::cout << k << "," << coeffs[k] << "\n";
      break;
    }
  }
  return 0;
}

// ---------------- fit / search ----------------

TruncSeries resolve_target_series(const Common& c,
                                  const std::string& series_file, int order,
                                  std::string& name) {
  if (!series_file.empty()) {
    name = series_file;
    TruncSeries s = load_series_file(series_file);
    return (order >= 0 && order < s.truncation()) ? s.truncated(order) : s;
  }
  Source src = resolve_source(c);
  name = src.name;
  if (order < 0)
    throw Error("--order is required when the target is an algebra");
  GrowthSeries g = growth_series(src.cartan, order, engine_options(c));
  if (g.budget_exceeded)
    throw Error("enumeration budget exceeded at order " +
                std::to_string(g.truncation()));
  return to_series(g);
}

json fit_record(const std::string& target, const DenominatorFit& f) {
  return json{{"target", target},
              {"g", f.finite_type.name()},
              {"status", "fit"},
              {"q", json_coeffs(f.q)},
              {"q_display", to_display_string(f.q)},
              {"observed_degree", f.observed_degree},
              {"positive_roots", f.positive_roots},
              {"verified_to", f.verified_to},
              {"guard", f.guard}};
}

void print_fit_plain(const DenominatorFit& f) {
  std::cout << "Q(" << f.finite_type.name() << ") = ("
            << to_display_string(f.q) << ")\n"
            << "  degree " << f.observed_degree << ", positive roots "
            << f.positive_roots << ", verified to t^" << f.verified_to
            << ", guard " << f.guard << "\n";
}

const char* kFitCsvHeader =
    "target,g,status,observed_degree,positive_roots,verified_to,guard,q\n";

void print_fit_csv(const std::string& target, const DenominatorFit& f) {
  std::cout << target << "," << f.finite_type.name() << ",fit,"
            << f.observed_degree << "," << f.positive_roots << ","
            << f.verified_to << "," << f.guard << ",\""
            << to_coeff_string(f.q) << "\"\n";
}

int cmd_fit(const Common& c, const std::string& series_file,
            const std::string& type, int order, int guard) {
  FiniteType g = FiniteType::parse(type);
  if (order < 0 && series_file.empty())
    order = g.positive_root_count() + guard;
  std::string name;
  TruncSeries target = resolve_target_series(c, series_file, order, name);
  auto fit = fit_denominator(target, g, guard);
  switch (c.format) {
    case Format::Plain:
      if (fit) {
        std::cout << "P(" << name << ") = P(" << g.name() << ") / Q with\n";
        print_fit_plain(*fit);
      } else {
        std::cout << "no fit: P(" << g.name() << ")/P(" << name
                  << ") does not terminate within guard " << guard
                  << " at t^" << target.truncation() << "\n";
      }
      break;
    case Format::Records:
      if (fit)
        emit(fit_record(name, *fit));
      else
        emit(json{{"target", name},
                  {"g", g.name()},
                  {"status", "none"},
                  {"verified_to", target.truncation()},
                  {"guard", guard}});
      break;
    case Format::Csv:
      std::cout << kFitCsvHeader;
      if (fit)
        print_fit_csv(name, *fit);
      else
        std::cout << name << "," << g.name() << ",none,,,"
                  << target.truncation() << "," << guard << ",\n";
      break;
  }
  return 0;
}

int cmd_search(const Common& c, const std::string& series_file, int max_rank,
               int order, int guard) {
  std::string name;
  TruncSeries target = resolve_target_series(c, series_file, order, name);
  auto fits = search_denominator(target, max_rank, guard);
  switch (c.format) {
    case Format::Plain:
      std::cout << fits.size() << " fit(s) for " << name << " (max rank "
                << max_rank << ", depth t^" << target.truncation()
                << ", guard " << guard << ")\n";
      for (const auto& f : fits) print_fit_plain(f);
      break;
    case Format::Records:
      for (const auto& f : fits) emit(fit_record(name, f));
      break;
    case Format::Csv:
      std::cout << kFitCsvHeader;
      for (const auto& f : fits) print_fit_csv(name, f);
      break;
  }
  return 0;
}

// ---------------- verify-catalog ----------------

int cmd_verify_catalog(const Common& c, const std::string& override_file,
                       std::vector<int> ids, int order, int guard) {
  auto entries = catalog::load_catalog(
      override_file.empty() ? std::nullopt
                            : std::optional<std::string>(override_file));
  if (ids.empty())
    for (const auto& e : entries) ids.push_back(e.id);

  EnumOptions opt = engine_options(c);
  int mismatches = 0, verified = 0, unavailable = 0;
  if (c.format == Format::Csv) std::cout << "id,name,g,status,depth,guard\n";
  for (int id : ids) {
    if (id < 1 || id > 48) throw Error("--entry must be in 1..48");
    const auto& e = entries[id - 1];
    catalog::VerificationReport rep = catalog::verify_entry(e, order, guard, opt);
    mismatches += rep.status == catalog::VerifyStatus::Mismatch;
    verified += rep.status == catalog::VerifyStatus::Verified;
    unavailable += rep.status == catalog::VerifyStatus::MatrixUnavailable;
    switch (c.format) {
      case Format::Plain:
        std::cout << e.name << ": " << catalog::to_string(rep.status);
        if (rep.status == catalog::VerifyStatus::Verified)
          std::cout << "  Q_" << e.id << "(" << e.finite_type.name()
                    << ") = (" << to_display_string(e.q) << ")  [depth "
                    << rep.depth_checked << "]";
        if (!rep.reason.empty()) std::cout << "  -- " << rep.reason;
        std::cout << "\n";
        break;
      case Format::Records: {
        json j{{"id", e.id},
               {"name", e.name},
               {"g", e.finite_type.name()},
               {"status", catalog::to_string(rep.status)},
               {"depth", rep.depth_checked},
               {"guard", rep.guard}};
        if (rep.q_computed) j["q_computed"] = json_coeffs(*rep.q_computed);
        if (!rep.reason.empty()) j["reason"] = rep.reason;
        emit(j);
        break;
      }
      case Format::Csv:
        std::cout << e.id << "," << e.name << "," << e.finite_type.name()
                  << "," << catalog::to_string(rep.status) << ","
                  << rep.depth_checked << "," << rep.guard << "\n";
        break;
    }
    std::cerr << e.name << " " << catalog::to_string(rep.status) << " ("
              << rep.seconds << " s)\n";
  }
  std::cerr << "verified " << verified << ", unavailable " << unavailable
            << ", mismatched " << mismatches << "\n";
  return mismatches ? 2 : 0;
}

std::vector<int> parse_node_list(const std::string& text) {
  NodeSet out;
  for (const Integer& v : parse_coeff_string(text)) {
    if (v < 1) throw Error("--J nodes are 1-based");
    out.push_back(static_cast<int>(v) - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth series of Weyl groups of Kac-Moody algebras"};
  app.require_subcommand(1);

  Common c_classify, c_growth, c_cosets, c_poincare, c_fit, c_search,
      c_verify;

  auto* classify_cmd = app.add_subcommand("classify",
                                          "validate and classify a Cartan matrix");
  add_source_options(classify_cmd, c_classify);

  int growth_order = 0;
  std::string growth_checkpoint;
  auto* growth_cmd =
      app.add_subcommand("growth", "enumerate |W^k| level by level");
  add_source_options(growth_cmd, c_growth);
  add_engine_options(growth_cmd, c_growth);
  growth_cmd->add_option("--order", growth_order, "highest order to compute")
      ->required();
  growth_cmd->add_option("--checkpoint", growth_checkpoint,
                         "append per-level records (with timings) to this file");

  int cosets_order = 0;
  std::string cosets_J, cosets_checkpoint;
  auto* cosets_cmd = app.add_subcommand(
      "cosets", "count minimal coset representatives of a parabolic W_J");
  add_source_options(cosets_cmd, c_cosets);
  add_engine_options(cosets_cmd, c_cosets);
  cosets_cmd->add_option("--J", cosets_J, "parabolic nodes, e.g. 1,2,3,4")
      ->required();
  cosets_cmd->add_option("--order", cosets_order, "highest order to compute")
      ->required();
  cosets_cmd->add_option("--checkpoint", cosets_checkpoint,
                         "append per-level records (with timings) to this file");

  std::string poincare_type;
  int poincare_order = -1;
  auto* poincare_cmd = app.add_subcommand(
      "poincare", "closed-form Poincare polynomial or affine series");
  add_format_option(poincare_cmd, c_poincare.format);
  poincare_cmd
      ->add_option("--type", poincare_type, "finite type (B5) or affine:<type>")
      ->required();
  poincare_cmd->add_option("--order", poincare_order,
                           "truncation for affine series");

  std::string fit_type, fit_series_file;
  int fit_order = -1, fit_guard = 1;
  auto* fit_cmd = app.add_subcommand(
      "fit", "test P(H) = P(G)/Q against one finite type");
  add_source_options(fit_cmd, c_fit);
  add_engine_options(fit_cmd, c_fit);
  fit_cmd->add_option("--type", fit_type, "candidate finite type G")
      ->required();
  fit_cmd->add_option("--series-file", fit_series_file,
                      "growth series coefficients instead of an algebra");
  fit_cmd->add_option("--order", fit_order, "enumeration depth");
  fit_cmd->add_option("--guard", fit_guard,
                      "trailing zero coefficients required to call the "
                      "quotient a polynomial");

  std::string search_series_file;
  int search_max_rank = 0, search_order = -1, search_guard = 1;
  auto* search_cmd = app.add_subcommand(
      "search", "scan all finite types for denominator fits");
  add_source_options(search_cmd, c_search);
  add_engine_options(search_cmd, c_search);
  search_cmd->add_option("--max-rank", search_max_rank, "highest rank to try")
      ->required();
  search_cmd->add_option("--series-file", search_series_file,
                         "growth series coefficients instead of an algebra");
  search_cmd->add_option("--order", search_order, "enumeration depth");
  search_cmd->add_option("--guard", search_guard, "trailing zero guard");

  std::string verify_file;
  std::vector<int> verify_ids;
  int verify_order = -1, verify_guard = 1;
  auto* verify_cmd = app.add_subcommand(
      "verify-catalog", "recompute denominator polynomials per entry");
  add_format_option(verify_cmd, c_verify.format);
  add_engine_options(verify_cmd, c_verify);
  verify_cmd->add_option("--file", verify_file,
                         "override file with entry Cartan matrices");
  verify_cmd->add_option("--entry", verify_ids,
                         "entry ids to verify (default: all)");
  verify_cmd->add_option("--order", verify_order,
                         "enumeration depth (default: per-entry D + guard)");
  verify_cmd->add_option("--guard", verify_guard, "trailing zero guard");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify_cmd)) return cmd_classify(c_classify);
    if (app.got_subcommand(growth_cmd))
      return run_growth(c_growth, std::nullopt, growth_order,
                        growth_checkpoint);
    if (app.got_subcommand(cosets_cmd))
      return run_growth(c_cosets, parse_node_list(cosets_J), cosets_order,
                        cosets_checkpoint);
    if (app.got_subcommand(poincare_cmd))
      return cmd_poincare(c_poincare, poincare_type, poincare_order);
    if (app.got_subcommand(fit_cmd))
      return cmd_fit(c_fit, fit_series_file, fit_type, fit_order, fit_guard);
    if (app.got_subcommand(search_cmd))
      return cmd_search(c_search, search_series_file, search_max_rank,
                        search_order, search_guard);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify_catalog(c_verify, verify_file, verify_ids,
                                verify_order, verify_guard);
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
