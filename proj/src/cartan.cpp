#include "weyl/cartan.hpp"

#include <algorithm>
#include <sstream>

namespace weyl {

std::string to_string(CartanClass c) {
  switch (c) {
    case CartanClass::Finite: return "Finite";
    case CartanClass::Affine: return "Affine";
    case CartanClass::Indefinite: return "Indefinite";
  }
  return "?";
}

namespace {

// Fraction-free Gaussian elimination (Bareiss); exact over Integer.
Integer det_bareiss(std::vector<Integer> b, int n) {
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (b[k * n + k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (b[i * n + k] != 0) { pivot = i; break; }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(b[k * n + j], b[pivot * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = b[i * n + j] * b[k * n + k] - b[i * n + k] * b[k * n + j];
        b[i * n + j] = t / prev;  // divides exactly
      }
      b[i * n + k] = 0;
    }
    prev = b[k * n + k];
  }
  return sign * b[n * n - 1];
}

Integer det_raw(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  std::vector<Integer> b;
  b.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : m)
    for (auto v : row) b.push_back(v);
  return det_bareiss(std::move(b), n);
}

IntMatrix submatrix_raw(const IntMatrix& m, const std::vector<int>& nodes) {
  IntMatrix s(nodes.size(), std::vector<std::int64_t>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j)
      s[i][j] = m[nodes[i]][nodes[j]];
  return s;
}

bool connected_raw(const IntMatrix& m) {
  return connected_components(m).size() <= 1;
}

// Classification of a connected GCM by exact principal minors: Finite iff
// every principal minor is positive; Affine iff det = 0 and every proper
// principal minor is positive; Indefinite otherwise.
CartanClass classify_connected_raw(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  Integer full = det_raw(m);
  bool proper_positive = true;
  for (unsigned mask = 1; mask + 1 < (1u << n) && proper_positive; ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    if (det_raw(submatrix_raw(m, nodes)) <= 0) proper_positive = false;
  }
  if (proper_positive && full > 0) return CartanClass::Finite;
  if (proper_positive && full == 0) return CartanClass::Affine;
  return CartanClass::Indefinite;
}

// Indefinite m is hyperbolic when deleting any one node leaves only
// finite- or affine-type connected components.
bool hyperbolic_raw(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  for (int del = 0; del < n; ++del) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != del) rest.push_back(i);
    IntMatrix sub = submatrix_raw(m, rest);
    for (const auto& comp : connected_components(sub)) {
      if (classify_connected_raw(submatrix_raw(sub, comp)) ==
          CartanClass::Indefinite)
        return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && m[v][w] != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
  return out;
}

CartanMatrix CartanMatrix::validate(const IntMatrix& raw,
                                    std::vector<std::string> labels) {
  int n = static_cast<int>(raw.size());
  if (n == 0) throw NotGCM("empty matrix");
  for (const auto& row : raw)
    if (static_cast<int>(row.size()) != n)
      throw NotGCM("matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (raw[i][i] != 2) {
      std::ostringstream os;
      os << "diagonal entry A[" << i + 1 << "][" << i + 1 << "] = "
         << raw[i][i] << ", expected 2";
      throw NotGCM(os.str());
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (raw[i][j] > 0) {
        std::ostringstream os;
        os << "off-diagonal entry A[" << i + 1 << "][" << j + 1 << "] = "
           << raw[i][j] << " is positive";
        throw NotGCM(os.str());
      }
      if ((raw[i][j] == 0) != (raw[j][i] == 0)) {
        std::ostringstream os;
        os << "zero pattern asymmetric at (" << i + 1 << "," << j + 1 << ")";
        throw NotGCM(os.str());
      }
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw NotGCM("label count does not match rank");
  if (!connected_raw(raw))
    throw Disconnected("diagram is disconnected; classify components separately");

  CartanMatrix m;
  m.n_ = n;
  m.a_.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : raw)
    for (auto v : row) m.a_.push_back(v);
  m.labels_ = std::move(labels);
  m.class_ = classify_connected_raw(raw);
  m.hyperbolic_ =
      m.class_ == CartanClass::Indefinite && hyperbolic_raw(raw);
  return m;
}

IntMatrix CartanMatrix::entries() const {
  IntMatrix out(n_, std::vector<std::int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = entry(i, j);
  return out;
}

Classification classify(const CartanMatrix& m) {
  return {m.cartan_class(), m.hyperbolic()};
}

Integer determinant(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size())
      throw Error("determinant: matrix is not square");
  return det_raw(m);
}

Integer determinant(const CartanMatrix& m) { return det_raw(m.entries()); }

IntMatrix principal_submatrix(const CartanMatrix& m,
                              const std::vector<int>& nodes) {
  for (int v : nodes)
    if (v < 0 || v >= m.rank()) throw Error("principal_submatrix: node out of range");
  return submatrix_raw(m.entries(), nodes);
}

Weight Weight::from_int64(const std::vector<std::int64_t>& v) {
  std::vector<Integer> c(v.begin(), v.end());
  return Weight(std::move(c));
}

Weight Weight::rho(int rank) {
  return Weight(std::vector<Integer>(rank, Integer(1)));
}

Weight reflect(const Weight& w, int i, const CartanMatrix& m) {
  int n = m.rank();
  if (w.rank() != n) throw Error("reflect: weight rank mismatch");
  if (i < 0 || i >= n) throw Error("reflect: node index out of range");
  std::vector<Integer> out(w.coords());
  const Integer& wi = w.coord(i);
  if (wi != 0) {
    for (int j = 0; j < n; ++j) out[j] -= wi * m.entry(j, i);
  }
  return Weight(std::move(out));
}

RationalMatrix inverse_cartan(const CartanMatrix& m) {
  int n = m.rank();
  // Gauss-Jordan over exact rationals on [A | I].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.entry(i, j);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw Singular("Cartan matrix is singular (affine type)");
    std::swap(a[col], a[pivot]);
    Rational p = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = a[i][n + j];
  return inv;
}

}  // namespace weyl
