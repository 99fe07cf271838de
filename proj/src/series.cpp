#include "weyl/series.hpp"

#include <algorithm>
#include <sstream>

namespace weyl {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_int64(const std::vector<std::int64_t>& coeffs) {
  return IntPoly(std::vector<Integer>(coeffs.begin(), coeffs.end()));
}

std::optional<std::size_t> IntPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> out(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Integer> out(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly();
  std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(out));
}

TruncSeries::TruncSeries(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error("TruncSeries: needs at least the t^0 coefficient");
}

TruncSeries TruncSeries::from_int64(const std::vector<std::int64_t>& coeffs) {
  return TruncSeries(std::vector<Integer>(coeffs.begin(), coeffs.end()));
}

TruncSeries TruncSeries::from_uint64(const std::vector<std::uint64_t>& coeffs) {
  return TruncSeries(std::vector<Integer>(coeffs.begin(), coeffs.end()));
}

TruncSeries TruncSeries::from_poly(const IntPoly& p, int truncation) {
  if (truncation < 0) throw Error("TruncSeries: negative truncation");
  std::vector<Integer> c(static_cast<size_t>(truncation) + 1, Integer(0));
  const auto& pc = p.coeffs();
  for (size_t i = 0; i < pc.size() && i < c.size(); ++i) c[i] = pc[i];
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::truncated(int t) const {
  if (t < 0 || t > truncation())
    throw Error("TruncSeries::truncated: order out of range");
  return TruncSeries(std::vector<Integer>(c_.begin(), c_.begin() + t + 1));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  int t = std::min(a.truncation(), b.truncation());
  std::vector<Integer> out(static_cast<size_t>(t) + 1, Integer(0));
  for (int i = 0; i <= t; ++i)
    for (int j = 0; j <= t - i; ++j) out[i + j] += a.coeff(i) * b.coeff(j);
  return TruncSeries(std::move(out));
}

TruncSeries series_div(const TruncSeries& num, const TruncSeries& den) {
  const Integer& d0 = den.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw NonUnitConstant("series_div: denominator constant term must be +1 or -1");
  int t = std::min(num.truncation(), den.truncation());
  std::vector<Integer> q(static_cast<size_t>(t) + 1, Integer(0));
  for (int k = 0; k <= t; ++k) {
    Integer acc = num.coeff(k);
    for (int s = 0; s < k; ++s) acc -= q[s] * den.coeff(k - s);
    q[k] = (d0 == 1) ? acc : -acc;
  }
  return TruncSeries(std::move(q));
}

std::optional<IntPoly> polynomial_terminates(const TruncSeries& s, int guard) {
  if (guard < 1) throw Error("polynomial_terminates: guard must be >= 1");
  int t = s.truncation();
  if (guard > t)
    throw GuardExceedsTruncation("polynomial_terminates: guard exceeds truncation");
  for (int k = t - guard + 1; k <= t; ++k)
    if (s.coeff(k) != 0) return std::nullopt;
  std::vector<Integer> prefix(s.coeffs().begin(),
                              s.coeffs().begin() + (t - guard + 1));
  return IntPoly(std::move(prefix));
}

std::string to_coeff_string(const IntPoly& p) {
  std::ostringstream os;
  const auto& c = p.coeffs();
  if (c.empty()) return "0";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    os << c[i];
  }
  return os.str();
}

std::string to_coeff_string(const TruncSeries& s) {
  std::ostringstream os;
  for (int k = 0; k <= s.truncation(); ++k) {
    if (k) os << ", ";
    os << s.coeff(k);
  }
  return os.str();
}

std::vector<Integer> parse_coeff_string(const std::string& text) {
  std::vector<Integer> out;
  std::string token;
  auto flush = [&] {
    // trim
    size_t a = token.find_first_not_of(" \t\r\n");
    size_t b = token.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return;
    std::string body = token.substr(a, b - a + 1);
    try {
      out.emplace_back(body);
    } catch (const std::exception&) {
      throw Error("parse_coeff_string: bad integer '" + body + "'");
    }
  };
  for (char ch : text) {
    if (ch == ',' || ch == '\n') {
      flush();
      token.clear();
    } else {
      token += ch;
    }
  }
  flush();
  if (out.empty()) throw Error("parse_coeff_string: no coefficients");
  return out;
}

namespace {

void append_term(std::ostream& os, const Integer& c, int k, bool first) {
  Integer a = c < 0 ? Integer(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (k == 0) {
    os << a;
  } else {
    if (a != 1) os << a << " ";
    os << "t";
    if (k > 1) os << "^" << k;
  }
}

}  // namespace

std::string to_display_string(const IntPoly& p) {
  const auto& c = p.coeffs();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    append_term(os, c[k], static_cast<int>(k), first);
    first = false;
  }
  return os.str();
}

std::string to_display_string(const TruncSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.truncation(); ++k) {
    if (s.coeff(k) == 0) continue;
    append_term(os, s.coeff(k), k, first);
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << s.truncation() + 1 << ")";
  return os.str();
}

}  // namespace weyl
