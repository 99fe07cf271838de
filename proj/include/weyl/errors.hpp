#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// validate_gcm: input is not a generalized Cartan matrix.
struct NotGCM : Error {
  using Error::Error;
};

// classify and friends require a connected diagram.
struct Disconnected : Error {
  using Error::Error;
};

// inverse_cartan on a singular (affine) matrix.
struct Singular : Error {
  using Error::Error;
};

// Unknown finite type family/rank.
struct UnknownType : Error {
  using Error::Error;
};

// series_div needs a unit constant term in the denominator.
struct NonUnitConstant : Error {
  using Error::Error;
};

struct GuardExceedsTruncation : Error {
  using Error::Error;
};

// fit_denominator: series too short to certify a polynomial of the
// candidate's expected degree with the requested guard.
struct TruncationTooShallow : Error {
  using Error::Error;
};

// compute_R in strict mode: quotient is not a genuine coset series.
struct NegativeCoefficient : Error {
  NegativeCoefficient(const std::string& msg, int order_)
      : Error(msg), order(order_) {}
  int order;
};

// reduced_words: enumeration stopped (budget) before the requested level.
struct LevelNotEnumerated : Error {
  using Error::Error;
};

// finite_order hit its depth cap without the frontier emptying.
struct NotFinite : Error {
  using Error::Error;
};

// Structured input files (algebra definitions, catalog overrides).
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace weyl
