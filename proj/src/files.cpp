#include "weyl/files.hpp"

#include "weyl/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace weyl {

using nlohmann::json;

AlgebraDefinition parse_algebra_json(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw SchemaError(std::string("algebra file: ") + ex.what());
  }
  if (!root.is_object())
    throw SchemaError("algebra file: top level must be an object");
  if (!root.contains("cartan"))
    throw SchemaError("algebra file: missing field 'cartan'");

  IntMatrix m;
  for (const auto& row : root.at("cartan")) {
    if (!row.is_array())
      throw SchemaError("algebra file: 'cartan' rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw SchemaError("algebra file: 'cartan' entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  if (root.contains("rank") &&
      root.at("rank").get<int>() != static_cast<int>(m.size()))
    throw SchemaError("algebra file: 'rank' does not match matrix size");

  std::vector<std::string> labels;
  if (root.contains("labels")) {
    for (const auto& v : root.at("labels")) {
      if (!v.is_string())
        throw SchemaError("algebra file: 'labels' entries must be strings");
      labels.push_back(v.get<std::string>());
    }
  }

  AlgebraDefinition def{
      root.contains("name") ? root.at("name").get<std::string>() : "",
      [&] {
        try {
          return validate_gcm(m, labels);
        } catch (const Error& ex) {
          throw SchemaError(std::string("algebra file: ") + ex.what());
        }
      }()};
  return def;
}

AlgebraDefinition load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open algebra file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

TruncSeries load_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open series file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return TruncSeries(parse_coeff_string(buf.str()));
  } catch (const Error& ex) {
    throw SchemaError("series file " + path + ": " + ex.what());
  }
}

}  // namespace weyl
