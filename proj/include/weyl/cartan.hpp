/*
  cartan.hpp — generalized Cartan matrices, their classification, and the
  weight lattice with simple reflections.

  Conventions (fixed once, used everywhere):
    * standard GCM signs: diagonal +2, off-diagonal <= 0;
    * A[i][j] is the pairing of the simple root alpha_j against the simple
      coroot i, so alpha_j written in the fundamental-weight basis is
      column j of A;
    * weights are coordinate vectors in the fundamental-weight basis, and
      the Weyl vector rho is the all-ones vector.
*/

#pragma once

#include "weyl/errors.hpp"
#include "weyl/integers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weyl {

enum class CartanClass { Finite, Affine, Indefinite };

std::string to_string(CartanClass c);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

class CartanMatrix {
 public:
  // Validates and classifies; the only way to construct one.
  // Throws NotGCM for a bad matrix and Disconnected for a disconnected
  // diagram.
  static CartanMatrix validate(const IntMatrix& raw,
                               std::vector<std::string> labels = {});

  int rank() const { return n_; }
  std::int64_t entry(int i, int j) const { return a_[i * n_ + j]; }
  CartanClass cartan_class() const { return class_; }
  bool hyperbolic() const { return hyperbolic_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Row-major copy of the entries.
  IntMatrix entries() const;

  bool operator==(const CartanMatrix& o) const {
    return n_ == o.n_ && a_ == o.a_;
  }

 private:
  CartanMatrix() = default;
  int n_ = 0;
  std::vector<std::int64_t> a_;  // row-major
  CartanClass class_ = CartanClass::Indefinite;
  bool hyperbolic_ = false;
  std::vector<std::string> labels_;
};

inline CartanMatrix validate_gcm(const IntMatrix& raw,
                                 std::vector<std::string> labels = {}) {
  return CartanMatrix::validate(raw, std::move(labels));
}

struct Classification {
  CartanClass cartan_class;
  bool hyperbolic;
};

// Reclassifies from scratch; pure. Present mainly so raw matrices obtained
// by node deletion can be examined without re-validating.
Classification classify(const CartanMatrix& m);

// Exact determinant of an arbitrary square integer matrix (Bareiss).
Integer determinant(const IntMatrix& m);
Integer determinant(const CartanMatrix& m);

// Principal submatrix on the given 0-based node indices, in that order.
IntMatrix principal_submatrix(const CartanMatrix& m,
                              const std::vector<int>& nodes);

// Connected components of the diagram underlying a raw GCM-shaped matrix,
// as sorted lists of 0-based indices, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const IntMatrix& m);

/*
  A point of the weight lattice in fundamental-weight coordinates.
  Exact: coordinates never overflow.
*/
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Integer> coords) : c_(std::move(coords)) {}
  static Weight from_int64(const std::vector<std::int64_t>& v);

  // The Weyl vector: every coordinate 1.
  static Weight rho(int rank);

  int rank() const { return static_cast<int>(c_.size()); }
  const Integer& coord(int i) const { return c_[i]; }
  const std::vector<Integer>& coords() const { return c_; }

  bool operator==(const Weight& o) const { return c_ == o.c_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }

 private:
  std::vector<Integer> c_;
};

// Simple reflection sigma_i (0-based node index):
//   w  ->  w - w[i] * (column i of A).
Weight reflect(const Weight& w, int i, const CartanMatrix& m);

// Exact rational matrix; entries kept in lowest terms by cpp_rational.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Exact inverse; throws Singular when det(A) = 0 (the affine case).
RationalMatrix inverse_cartan(const CartanMatrix& m);

}  // namespace weyl
