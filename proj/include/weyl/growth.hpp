/*
  growth.hpp — level-by-level enumeration of a Weyl group through the
  orbit of the Weyl vector.

  The class of length-k elements is stored as the set of their images
  w(rho), which determine the elements uniquely. Coordinate i of an image
  is positive exactly when left-multiplying by sigma_i lengthens the
  element, so the next level is
      { sigma_i(v) : v in level k, v[i] > 0 },
  deduplicated within the level only; images never repeat across levels.
  Only the current frontier is kept.
*/

#pragma once

#include "weyl/cartan.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace weyl {

// 0-based node indices.
using NodeSet = std::vector<int>;

// Emitted after each completed level. `coefficient` is the series value
// being computed (the J-dominant count for coset runs), `frontier_size`
// the full level size.
struct LevelRecord {
  int level;
  std::uint64_t coefficient;
  std::uint64_t frontier_size;
  double elapsed_seconds;
};

struct EnumOptions {
  // 0 means all hardware threads; 1 forces the sequential baseline.
  int workers = 0;
  // Stop when the stored vector count would pass this (0 = default cap).
  std::uint64_t max_elements = std::uint64_t(1) << 31;
  // Approximate byte budget for frontier + candidates; 0 = unlimited.
  std::uint64_t max_bytes = 0;
  std::function<void(const LevelRecord&)> on_level;
};

struct GrowthSeries {
  // coeffs[k] = |W^k|, or the number of J-dominant level-k images for
  // coset runs.
  std::vector<std::uint64_t> coeffs;
  // The frontier emptied: the group is finite and this is the whole
  // Poincare polynomial.
  bool complete = false;
  // Enumeration stopped at the element/byte budget; coeffs hold the
  // levels that finished.
  bool budget_exceeded = false;

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
};

// One enumeration pass; both series come from the same frontier sweep.
struct Enumeration {
  GrowthSeries full;
  GrowthSeries filtered;  // equals `full` when no filter was given
  bool has_filter = false;
  // Images at the requested keep_level, if any.
  std::vector<std::vector<Integer>> level_images;
};

// The workhorse behind everything below. J filters coefficient counting
// only (J-dominant = all J coordinates positive); keep_level of -1 keeps
// nothing.
Enumeration enumerate_levels(const CartanMatrix& m, int max_order,
                             const std::optional<NodeSet>& J, int keep_level,
                             const EnumOptions& opt = {});

// c_k = |W^k| for k <= max_order.
GrowthSeries growth_series(const CartanMatrix& m, int max_order,
                           const EnumOptions& opt = {});

// c_k = number of level-k images that are J-dominant: the minimal-length
// right-coset representatives of the parabolic subgroup W_J, i.e. the
// coefficients of R in P(W) = P(W_J) * R.
GrowthSeries parabolic_coset_growth(const CartanMatrix& m, const NodeSet& J,
                                    int max_order,
                                    const EnumOptions& opt = {});

// Runs until the frontier empties; throws NotFinite at depth_cap.
GrowthSeries complete_growth(const CartanMatrix& m,
                             const EnumOptions& opt = {},
                             int depth_cap = 1024);

// |W| by exhaustive enumeration.
std::uint64_t finite_order(const CartanMatrix& m, const EnumOptions& opt = {},
                           int depth_cap = 1024);

// The canonical (lexicographically smallest) reduced word of every
// level-k element, as 0-based letters, sorted; one word per image. With
// a filter, only J-dominant images are reported. Throws
// LevelNotEnumerated when the budget stops enumeration before level k.
std::vector<std::vector<int>> reduced_words(
    const CartanMatrix& m, int level,
    const std::optional<NodeSet>& filter = std::nullopt,
    std::size_t limit = SIZE_MAX, const EnumOptions& opt = {});

// Canonical word of one image: repeatedly strip the smallest descent.
std::vector<int> canonical_word(const Weight& image, const CartanMatrix& m);

}  // namespace weyl
