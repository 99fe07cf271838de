/*
  files.hpp — input file formats shared by the CLI and the catalog.

  Algebra definition: JSON object
      {"name": "...", "rank": N, "cartan": [[...], ...], "labels": [...]}
  with labels optional. Series file: comma- or newline-separated integer
  coefficients, lowest degree first.
*/

#pragma once

#include "weyl/cartan.hpp"
#include "weyl/series.hpp"

#include <string>

namespace weyl {

struct AlgebraDefinition {
  std::string name;
  CartanMatrix cartan;
};

AlgebraDefinition parse_algebra_json(const std::string& json_text);
AlgebraDefinition load_algebra_file(const std::string& path);

TruncSeries load_series_file(const std::string& path);

}  // namespace weyl
