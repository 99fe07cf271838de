/*
  catalog.hpp — the 48 hyperbolic algebras with their paired finite types
  and denominator polynomials, plus per-entry end-to-end verification.

  Only entry 48 ships with a Cartan matrix; the others accept
  user-supplied matrices through an override file (JSON array of
  {id, name, rank, cartan}).
*/

#pragma once

#include "weyl/factor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weyl {
namespace catalog {

struct CatalogEntry {
  int id = 0;                          // 1..48
  std::string name;                    // "H1".."H48"
  std::optional<CartanMatrix> cartan;  // built-in or user-supplied
  FiniteType finite_type;              // the paired finite simple G
  IntPoly q;                           // denominator polynomial, resolved
  std::optional<int> alias_of;         // table prints Q_i = Q_j
};

enum class VerifyStatus { Verified, MatrixUnavailable, Mismatch };

std::string to_string(VerifyStatus s);

struct VerificationReport {
  int id = 0;
  VerifyStatus status = VerifyStatus::MatrixUnavailable;
  std::string reason;  // set for Mismatch
  int depth_checked = -1;
  int guard = 1;
  std::optional<IntPoly> q_computed;
  double seconds = 0.0;
};

// All 48 entries, aliases resolved; with a path, matrices from that
// override file are attached (they must pass validation and be
// hyperbolic — SchemaError otherwise).
std::vector<CatalogEntry> load_catalog(
    const std::optional<std::string>& override_path = std::nullopt);

// Attach override records given as JSON text. Exposed for tests.
void apply_overrides(std::vector<CatalogEntry>& entries,
                     const std::string& json_text);

// Enumerates the entry's Weyl group to max_order (default: positive
// roots of G plus guard), fits the denominator against G and compares
// with the catalog polynomial. Never throws on bad outcomes; the status
// carries them.
VerificationReport verify_entry(const CatalogEntry& e, int max_order = -1,
                                int guard = 1, const EnumOptions& opt = {});

// Constants transcribed from the worked H48 example: its growth series
// through t^25, P(A4), the three displayed rational functions, and the
// coset counts through level 6.
struct PaperConstants {
  std::vector<std::uint64_t> h48_series;
  IntPoly p_a4;
  std::vector<IntPoly> r1_numerator_factors;
  IntPoly r1_numerator;
  IntPoly r12_denominator;  // shared by R1 and R2
  IntPoly r2_numerator;
  std::vector<IntPoly> r3_numerator_factors;
  IntPoly r3_numerator;
  IntPoly r3_denominator;
  std::vector<std::uint64_t> r1_rep_counts;
};

const PaperConstants& paper_constants();

// The built-in rank-6 matrix of entry 48.
CartanMatrix h48_cartan();

// Raw embedded data; the test suite freezes a checksum of this.
const char* embedded_json();

}  // namespace catalog
}  // namespace weyl
