#include "weyl/finite_type.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace weyl {

namespace {

void check_valid(char family, int rank) {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 3; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "unknown finite type " << family << rank;
    throw UnknownType(os.str());
  }
}

}  // namespace

FiniteType::FiniteType(char family, int rank) : family_(family), rank_(rank) {
  check_valid(family, rank);
}

FiniteType FiniteType::parse(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2) throw UnknownType("cannot parse finite type '" + name + "'");
  char fam = static_cast<char>(toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw UnknownType("cannot parse finite type '" + name + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  return FiniteType(fam, rank);
}

std::string FiniteType::name() const {
  return std::string(1, family_) + std::to_string(rank_);
}

std::vector<int> FiniteType::degrees() const {
  std::vector<int> d;
  switch (family_) {
    case 'A':
      for (int i = 2; i <= rank_ + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= rank_; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i + 1 <= rank_; ++i) d.push_back(2 * i);
      d.push_back(rank_);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (rank_ == 6) d = {2, 5, 6, 8, 9, 12};
      else if (rank_ == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  return d;
}

int FiniteType::positive_root_count() const {
  int s = 0;
  for (int d : degrees()) s += d - 1;
  return s;
}

Integer FiniteType::weyl_order() const {
  Integer w = 1;
  for (int d : degrees()) w *= d;
  return w;
}

CartanMatrix FiniteType::cartan() const {
  int n = rank_;
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j, std::int64_t aij = -1, std::int64_t aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (family_) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      // last simple root short: A[n-1][n-2] = -2
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -1, -2);
      break;
    case 'C':
      // last simple root long: transpose of B
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
      edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case 'F':
      edge(0, 1);
      edge(1, 2, -1, -2);
      edge(2, 3);
      break;
    case 'G':
      edge(0, 1, -1, -3);
      break;
  }
  return validate_gcm(a);
}

std::vector<FiniteType> all_finite_types(int max_rank) {
  std::vector<FiniteType> out;
  for (char fam : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    for (int r = 1; r <= max_rank; ++r) {
      try {
        out.emplace_back(fam, r);
      } catch (const UnknownType&) {
      }
    }
  }
  return out;
}

IntPoly finite_poincare(const FiniteType& ft) {
  IntPoly acc = IntPoly::one();
  for (int d : ft.degrees()) {
    // (t^d - 1)/(t - 1) = 1 + t + ... + t^{d-1}
    acc = acc * IntPoly(std::vector<Integer>(d, Integer(1)));
  }
  return acc;
}

TruncSeries affine_poincare(const FiniteType& ft, int max_order) {
  if (max_order < 0) throw Error("affine_poincare: negative order");
  TruncSeries acc = TruncSeries::from_poly(finite_poincare(ft), max_order);
  for (int d : ft.degrees()) {
    int m = d - 1;
    // multiply by 1/(1 - t^m): prefix sums with stride m
    std::vector<Integer> c(acc.coeffs());
    for (int k = m; k <= max_order; ++k) c[k] += c[k - m];
    acc = TruncSeries(std::move(c));
  }
  return acc;
}

namespace {

// Roots in simple-root coordinates. sigma_i acts by
//   c  ->  c - (row i of A . c) e_i.
std::set<std::vector<std::int64_t>> root_system(const CartanMatrix& m) {
  int n = m.rank();
  std::set<std::vector<std::int64_t>> roots;
  std::vector<std::vector<std::int64_t>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto c = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += m.entry(i, j) * c[j];
      auto r = c;
      r[i] -= pairing;
      if (roots.insert(r).second) queue.push_back(r);
    }
  }
  return roots;
}

}  // namespace

CartanMatrix affine_cartan(const FiniteType& ft) {
  CartanMatrix fin = ft.cartan();
  int n = fin.rank();

  // Highest root = the dominant root of greatest height.
  std::vector<std::int64_t> theta;
  std::int64_t best_height = -1;
  for (const auto& c : root_system(fin)) {
    bool dominant = true;
    for (int i = 0; i < n && dominant; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += fin.entry(i, j) * c[j];
      if (p < 0) dominant = false;
    }
    if (!dominant) continue;
    std::int64_t h = std::accumulate(c.begin(), c.end(), std::int64_t(0));
    if (h > best_height) {
      best_height = h;
      theta = c;
    }
  }

  // Symmetrizer d_i (up to scale, d_i ~ |alpha_i|^2), by edge propagation.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || fin.entry(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * fin.entry(i, j) / fin.entry(j, i);
      stack.push_back(j);
    }
  }
  Rational dmax = *std::max_element(d.begin(), d.end());

  // Comarks: theta_j * d_j / d_max; exact integers for every finite type.
  std::vector<std::int64_t> comark(n);
  for (int j = 0; j < n; ++j) {
    Rational v = Rational(theta[j]) * d[j] / dmax;
    if (boost::multiprecision::denominator(v) != 1)
      throw Error("affine_cartan: non-integral comark");
    comark[j] =
        static_cast<std::int64_t>(boost::multiprecision::numerator(v));
  }

  IntMatrix a(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = fin.entry(i, j);
  a[n][n] = 2;
  for (int j = 0; j < n; ++j) {
    std::int64_t pair_theta = 0;  // <theta, alpha_j^vee>
    std::int64_t pair_dual = 0;   // <alpha_j, theta^vee>
    for (int k = 0; k < n; ++k) {
      pair_theta += fin.entry(j, k) * theta[k];
      pair_dual += comark[k] * fin.entry(k, j);
    }
    a[j][n] = -pair_theta;
    a[n][j] = -pair_dual;
  }
  return validate_gcm(a);
}

}  // namespace weyl
