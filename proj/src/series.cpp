#include "dyckstat/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <json.hpp>

#include "dyckstat/checked.hpp"
#include "dyckstat/error.hpp"

namespace dyckstat {

using Coeff = BivariateSeries::Coeff;
using Row = std::vector<Coeff>;

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  rows_.resize(static_cast<std::size_t>(order) + 1);
}

BivariateSeries BivariateSeries::constant(Coeff c, int order) { return monomial(c, 0, 0, order); }

BivariateSeries BivariateSeries::monomial(Coeff c, int xdeg, int ydeg, int order) {
  if (xdeg < 0 || ydeg < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  BivariateSeries s(order);
  if (xdeg <= order && c != 0) {
    auto& row = s.rows_[static_cast<std::size_t>(xdeg)];
    row.assign(static_cast<std::size_t>(ydeg) + 1, 0);
    row.back() = c;
  }
  return s;
}

BivariateSeries BivariateSeries::from_rows(int order, std::vector<std::vector<Coeff>> rows) {
  BivariateSeries s(order);
  for (std::size_t n = 0; n < rows.size() && n < s.rows_.size(); ++n) {
    s.rows_[n] = std::move(rows[n]);
    s.trim(n);
  }
  return s;
}

Coeff BivariateSeries::coeff(int n, int k) const noexcept {
  if (n < 0 || n > order_ || k < 0) return 0;
  const auto& row = rows_[static_cast<std::size_t>(n)];
  return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : 0;
}

BivariateSeries BivariateSeries::with_coeff(int n, int k, Coeff value) const {
  if (n < 0 || n > order_ || k < 0) throw Error(ErrorKind::IndexOutOfRange, "coefficient index out of range");
  BivariateSeries out = *this;
  auto& row = out.rows_[static_cast<std::size_t>(n)];
  if (row.size() <= static_cast<std::size_t>(k)) row.resize(static_cast<std::size_t>(k) + 1, 0);
  row[static_cast<std::size_t>(k)] = value;
  out.trim(static_cast<std::size_t>(n));
  return out;
}

void BivariateSeries::trim(std::size_t n) {
  auto& row = rows_[n];
  while (!row.empty() && row.back() == 0) row.pop_back();
}

bool BivariateSeries::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

BivariateSeries BivariateSeries::truncated(int order) const {
  BivariateSeries out(order);
  for (int n = 0; n <= std::min(order, order_); ++n) out.rows_[static_cast<std::size_t>(n)] = row(n);
  return out;
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries out = *this;
  for (auto& row : out.rows_) {
    for (auto& c : row) c = checked_sub(0, c);
  }
  return out;
}

namespace {

Row row_add(const Row& a, const Row& b, bool subtract) {
  Row out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Coeff x = k < a.size() ? a[k] : 0;
    const Coeff y = k < b.size() ? b[k] : 0;
    out[k] = subtract ? checked_sub(x, y) : checked_add(x, y);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// acc += a * b as polynomials in y.
void row_mul_acc(Row& acc, const Row& a, const Row& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = checked_add(acc[i + j], checked_mul(a[i], b[j]));
  }
}

}  // namespace

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(std::min(a.order_, b.order_));
  for (int n = 0; n <= out.order_; ++n) out.rows_[static_cast<std::size_t>(n)] = row_add(a.row(n), b.row(n), false);
  return out;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(std::min(a.order_, b.order_));
  for (int n = 0; n <= out.order_; ++n) out.rows_[static_cast<std::size_t>(n)] = row_add(a.row(n), b.row(n), true);
  return out;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(std::min(a.order_, b.order_));
  for (int n = 0; n <= out.order_; ++n) {
    Row acc;
    for (int i = 0; i <= n; ++i) row_mul_acc(acc, a.row(i), b.row(n - i));
    out.rows_[static_cast<std::size_t>(n)] = std::move(acc);
    out.trim(static_cast<std::size_t>(n));
  }
  return out;
}

BivariateSeries divide(const BivariateSeries& a, const BivariateSeries& b) {
  const auto& b0 = b.row(0);
  if (b0.size() != 1 || (b0[0] != 1 && b0[0] != -1)) {
    throw Error(ErrorKind::NonUnitDivisor, "divisor must have constant term +1 or -1 and no other x^0 terms");
  }
  const Coeff unit = b0[0];
  const int order = std::min(a.order(), b.order());
  std::vector<Row> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Row acc = a.row(n);
    Row sub;
    for (int i = 1; i <= n; ++i) row_mul_acc(sub, b.row(i), c[static_cast<std::size_t>(n - i)]);
    acc = row_add(acc, sub, true);
    for (auto& v : acc) v = checked_mul(v, unit);
    c[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return BivariateSeries::from_rows(order, std::move(c));
}

BivariateSeries pow(const BivariateSeries& base, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  BivariateSeries out = BivariateSeries::constant(1, base.order());
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

std::string BivariateSeries::to_json() const {
  nlohmann::json j;
  j["order"] = order_;
  j["coeffs"] = nlohmann::json::array();
  for (int n = 0; n <= order_; ++n) {
    const auto& r = row(n);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] != 0) j["coeffs"].push_back({n, static_cast<int>(k), r[k]});
    }
  }
  return j.dump();
}

BivariateSeries BivariateSeries::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    BivariateSeries out(j.at("order").get<int>());
    for (const auto& entry : j.at("coeffs")) {
      out = out.with_coeff(entry.at(0).get<int>(), entry.at(1).get<int>(), entry.at(2).get<Coeff>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed series JSON: ") + e.what());
  }
}

std::string BivariateSeries::to_triangle() const {
  std::ostringstream os;
  for (int n = 0; n <= order_; ++n) {
    os << n << ':';
    const auto& r = row(n);
    if (r.empty()) os << " 0";
    for (Coeff c : r) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

// XPolynomial ---------------------------------------------------------------

XPolynomial::XPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

double XPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

BivariateSeries XPolynomial::to_series(int order) const {
  std::vector<Row> rows;
  for (auto c : coeffs_) rows.push_back(Row{c});
  return BivariateSeries::from_rows(order, std::move(rows));
}

XPolynomial c_poly(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "c_k needs k >= 0");
  std::vector<std::int64_t> prev{1};
  std::vector<std::int64_t> cur{1};
  for (int i = 2; i <= k; ++i) {
    std::vector<std::int64_t> next(std::max(cur.size(), prev.size() + 1), 0);
    for (std::size_t d = 0; d < cur.size(); ++d) next[d] = cur[d];
    for (std::size_t d = 0; d < prev.size(); ++d) next[d + 1] = checked_sub(next[d + 1], prev[d]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return XPolynomial(k == 0 ? prev : cur);
}

double chebyshev_u(int k, double z) {
  // For |z| > 1 the angle is complex; the quotient is still real.
  const std::complex<double> t = std::acos(std::complex<double>(z, 0.0));
  const std::complex<double> s = std::sin(t);
  if (std::abs(s) < 1e-300) return static_cast<double>(k + 1) * (z > 0 ? 1.0 : ((k % 2 == 0) ? 1.0 : -1.0));
  return (std::sin(static_cast<double>(k + 1) * t) / s).real();
}

double chebyshev_rewrite_error(int max_k, const std::vector<double>& samples) {
  double worst = 0.0;
  for (double x0 : samples) {
    const double z = 1.0 / (2.0 * std::sqrt(x0));
    for (int k = 0; k <= max_k; ++k) {
      const double ref = std::pow(x0, k / 2.0) * chebyshev_u(k, z);
      const double got = c_poly(k).evaluate(x0);
      worst = std::max(worst, std::abs(got - ref) / std::max(std::abs(ref), 1e-300));
    }
  }
  return worst;
}

BivariateSeries bounded_height_gf(int h, int order) {
  if (h < 0) throw Error(ErrorKind::InvalidArgument, "height bound must be nonnegative");
  return divide(c_poly(h).to_series(order), c_poly(h + 1).to_series(order));
}

std::uint64_t count_height_bounded(int n, int h) {
  if (n < 0 || h < 0) throw Error(ErrorKind::InvalidArgument, "need n >= 0 and h >= 0");
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(h) + 1, 0);
  ways[0] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t a = 0; a < ways.size(); ++a) {
      if (ways[a] == 0) continue;
      if (a + 1 < ways.size()) next[a + 1] = checked_add(next[a + 1], ways[a]);
      if (a > 0) next[a - 1] = checked_add(next[a - 1], ways[a]);
    }
    ways = std::move(next);
  }
  return ways[0];
}

// Continued fractions -------------------------------------------------------

namespace {

BivariateSeries marked_x(const ResidueSpec& spec, int residue, int order) {
  return BivariateSeries::monomial(1, 1, spec.contains(residue) ? 1 : 0, order);
}

BivariateSeries fixed_point(const std::function<BivariateSeries(const BivariateSeries&)>& step, int order,
                            const char* what) {
  BivariateSeries cur = BivariateSeries::constant(1, order);
  for (int it = 0; it < order + 2; ++it) {
    BivariateSeries next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorKind::NonConvergence, std::string(what) + " did not stabilise within order + 2 iterations");
}

}  // namespace

BivariateSeries cf_evaluate(const ResidueSpec& spec, const BivariateSeries& g) {
  const int order = g.order();
  const auto one = BivariateSeries::constant(1, order);
  BivariateSeries denom = one - marked_x(spec, 0, order) * g;
  for (int i = spec.m() - 1; i >= 1; --i) denom = one - divide(marked_x(spec, i, order), denom);
  return divide(one, denom);
}

BivariateSeries cf_series(const ResidueSpec& spec, int order) {
  return fixed_point([&](const BivariateSeries& g) { return cf_evaluate(spec, g); }, order, "continued fraction");
}

BivariateSeries brute_series(const ResidueSpec& spec, int order, const EnumerationCaps& caps) {
  if (order > caps.dyck) {
    throw Error(ErrorKind::CapExceeded, "order " + std::to_string(order) + " exceeds the Dyck enumeration cap");
  }
  BivariateSeries out(order);
  for (int n = 0; n <= order; ++n) {
    const auto table = distribution(n, Statistic::up_residue(spec), caps);
    for (const auto& [k, count] : table.counts) out = out.with_coeff(n, k, static_cast<Coeff>(count));
  }
  return out;
}

BivariateSeries quadratic_g03_residual(const BivariateSeries& g) {
  const int N = g.order();
  const auto one = BivariateSeries::constant(1, N);
  const auto x = BivariateSeries::monomial(1, 1, 0, N);
  const auto xy = BivariateSeries::monomial(1, 1, 1, N);
  const auto two_x = BivariateSeries::monomial(2, 1, 0, N);
  return xy * (one - x) * g * g - (one - two_x + xy) * g + (one - x);
}

bool check_quadratic_g03(int order) { return quadratic_g03_residual(cf_series(ResidueSpec(3, {0}), order)).is_zero(); }

TheoremMainReport check_theorem_main(int m, int order) {
  if (m < 2) throw Error(ErrorKind::InvalidM, "identity check needs m >= 2");
  TheoremMainReport rep;
  rep.m = m;
  rep.order = order;
  const auto top = cf_series(ResidueSpec(m, {m - 1}), order);
  const auto bottom = cf_series(ResidueSpec(m, {0}), order);
  const auto y = BivariateSeries::monomial(1, 0, 1, order);
  const auto one_minus_y = BivariateSeries::constant(1, order) - y;
  const auto bounded = bounded_height_gf(m - 2, order);
  rep.difference = top - y * bottom - one_minus_y * bounded;
  rep.series_identity = rep.difference.is_zero();
  if (!rep.series_identity) rep.failures.push_back("series difference is nonzero");

  // Terms with y^i, i >= 2, vanish from G^{(m-1;m)} - y G^{(0;m)}.
  rep.higher_powers_vanish = true;
  const auto lhs = top - y * bottom;
  for (int n = 0; n <= order; ++n) {
    if (lhs.row(n).size() > 2) {
      rep.higher_powers_vanish = false;
      rep.failures.push_back("y^2 or higher term at x^" + std::to_string(n));
    }
  }

  rep.coefficient_identities = true;
  for (int n = 0; n <= order; ++n) {
    for (int j = 2; j <= n + 1; ++j) {
      if (top.coeff(n, j) != bottom.coeff(n, j - 1)) {
        rep.coefficient_identities = false;
        rep.failures.push_back("g^(m-1)_{" + std::to_string(n) + "," + std::to_string(j) + "} != g^(0)_{" +
                               std::to_string(n) + "," + std::to_string(j - 1) + "}");
      }
    }
    const auto low = static_cast<Coeff>(count_height_bounded(n, m - 2));
    if (top.coeff(n, 1) - bottom.coeff(n, 0) != -low || top.coeff(n, 0) != low) {
      rep.coefficient_identities = false;
      rep.failures.push_back("low-height identity fails at n = " + std::to_string(n));
    }
  }

  // (1-y) U_{m-2}/(sqrt(x) U_{m-1}) == (1-y) c_{m-2}/c_{m-1} at sample points.
  double worst = chebyshev_rewrite_error(m, kChebyshevSamples);
  for (double x0 : kChebyshevSamples) {
    const double z = 1.0 / (2.0 * std::sqrt(x0));
    const double ref = chebyshev_u(m - 2, z) / (std::sqrt(x0) * chebyshev_u(m - 1, z));
    const double got = c_poly(m - 2).evaluate(x0) / c_poly(m - 1).evaluate(x0);
    worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
  }
  rep.chebyshev_validated = worst <= kChebyshevTolerance;
  if (!rep.chebyshev_validated) rep.failures.push_back("Chebyshev rewriting deviates numerically");
  return rep;
}

// s-ary paths ---------------------------------------------------------------

BivariateSeries sary_equation_rhs(int s, SAryGf which, const BivariateSeries& f) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "s must be at least 1");
  const int N = f.order();
  const auto one = BivariateSeries::constant(1, N);
  const auto x = BivariateSeries::monomial(1, 1, 0, N);
  const auto y = BivariateSeries::monomial(1, 0, 1, N);
  const auto xy = BivariateSeries::monomial(1, 1, 1, N);
  if (which == SAryGf::P) {
    // P = 1 + x (P^s - (1-y)/(1-xy)) P
    return one + x * (pow(f, s) - divide(one - y, one - xy)) * f;
  }
  // E = 1 + x (y E^s + (1-y)/(1-x)) E
  return one + x * (y * pow(f, s) + divide(one - y, one - x)) * f;
}

BivariateSeries sary_series(int s, SAryGf which, int order) {
  return fixed_point([&](const BivariateSeries& f) { return sary_equation_rhs(s, which, f); }, order,
                     "s-ary functional equation");
}

BivariateSeries sary_brute(int s, SAryGf which, int order, const EnumerationCaps& caps) {
  BivariateSeries out(order);
  const auto stat = which == SAryGf::P ? Statistic::sary_pyramid(s) : Statistic::sary_exterior(s);
  for (int n = 0; n <= order; ++n) {
    for (const auto& [k, count] : distribution(n, stat, caps).counts) {
      out = out.with_coeff(n, k, static_cast<Coeff>(count));
    }
  }
  return out;
}

// Conjecture ----------------------------------------------------------------

namespace {

void check_conjecture_m(int part, int m) {
  if (part != 1 && part != 2) throw Error(ErrorKind::InvalidArgument, "conjecture part must be 1 or 2");
  if (part == 1 && m < 4) throw Error(ErrorKind::InvalidM, "part 1 needs m >= 4");
  if (part == 2 && m < 6) throw Error(ErrorKind::InvalidM, "part 2 needs m >= 6");
}

}  // namespace

double conjecture_rhs_chebyshev(int part, int m, double x, double y) {
  check_conjecture_m(part, m);
  const double z = 1.0 / (2.0 * std::sqrt(x));
  const double r = std::sqrt(x);
  if (part == 1) {
    return (1 - y) * chebyshev_u(m - 4, z) / (chebyshev_u(m - 2, z) - y * r * chebyshev_u(m - 3, z));
  }
  return (1 - y) * chebyshev_u(m - 6, z) /
         (chebyshev_u(m - 2, z) - y * chebyshev_u(m - 4, z) + r * chebyshev_u(m - 5, z));
}

double conjecture_rhs_polynomial(int part, int m, double x, double y) {
  check_conjecture_m(part, m);
  const auto c = [x](int k) { return c_poly(k).evaluate(x); };
  if (part == 1) return (1 - y) * x * c(m - 4) / (c(m - 2) - x * y * c(m - 3));
  return (1 - y) * x * x * c(m - 6) / (c(m - 2) - x * y * c(m - 4) + x * x * c(m - 5));
}

ConjectureReport check_conjecture(int part, int m, int order) {
  check_conjecture_m(part, m);
  ConjectureReport rep;
  rep.part = part;
  rep.m = m;
  rep.order = order;

  double worst = chebyshev_rewrite_error(m, kChebyshevSamples);
  for (double x0 : kChebyshevSamples) {
    for (double y0 : {0.5, 2.0, -1.0}) {
      const double ref = conjecture_rhs_chebyshev(part, m, x0, y0);
      const double got = conjecture_rhs_polynomial(part, m, x0, y0);
      worst = std::max(worst, std::abs(got - ref) / std::max(std::abs(ref), 1e-300));
    }
  }
  rep.rewrite_error = worst;
  rep.chebyshev_validated = worst <= kChebyshevTolerance;

  const int hi = part == 1 ? m - 2 : m - 3;
  const int lo = part == 1 ? 1 : 2;
  rep.lhs = cf_series(ResidueSpec(m, {hi}), order) - cf_series(ResidueSpec(m, {lo}), order);

  const auto one = BivariateSeries::constant(1, order);
  const auto y = BivariateSeries::monomial(1, 0, 1, order);
  const auto x = BivariateSeries::monomial(1, 1, 0, order);
  const auto xy = BivariateSeries::monomial(1, 1, 1, order);
  const auto c = [order](int k) { return c_poly(k).to_series(order); };
  if (part == 1) {
    rep.rhs = divide((one - y) * x * c(m - 4), c(m - 2) - xy * c(m - 3));
  } else {
    const auto x2 = x * x;
    rep.rhs = divide((one - y) * x2 * c(m - 6), c(m - 2) - xy * c(m - 4) + x2 * c(m - 5));
  }

  for (int n = 0; n <= order; ++n) {
    const auto width = std::max(rep.lhs.row(n).size(), rep.rhs.row(n).size());
    for (std::size_t k = 0; k < width; ++k) {
      const auto a = rep.lhs.coeff(n, static_cast<int>(k));
      const auto b = rep.rhs.coeff(n, static_cast<int>(k));
      if (a != b) rep.mismatches.push_back({n, static_cast<int>(k), a, b});
    }
  }
  return rep;
}

std::string ConjectureReport::to_text() const {
  std::ostringstream os;
  os << "conjecture part " << part << ", m = " << m << ", order " << order << ": "
     << (agrees() ? "full agreement" : "DISAGREEMENT") << " (Chebyshev rewriting "
     << (chebyshev_validated ? "validated" : "NOT validated") << ", max rel. error " << rewrite_error << ", "
     << mismatches.size() << " mismatching coefficients)\n";
  for (const auto& mm : mismatches) {
    os << "  [x^" << mm.n << " y^" << mm.k << "] lhs = " << mm.lhs << ", rhs = " << mm.rhs << '\n';
  }
  return os.str();
}

}  // namespace dyckstat
