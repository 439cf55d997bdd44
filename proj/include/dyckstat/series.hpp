#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dyckstat/dyck.hpp"

namespace dyckstat {

/// Power series in x truncated after x^order, with polynomial-in-y
/// coefficients. Exact 64-bit arithmetic; overflow raises Error{Overflow}.
class BivariateSeries {
 public:
  using Coeff = std::int64_t;

  explicit BivariateSeries(int order = 0);

  static BivariateSeries constant(Coeff c, int order);
  /// c * x^xdeg * y^ydeg (zero if xdeg > order).
  static BivariateSeries monomial(Coeff c, int xdeg, int ydeg, int order);
  /// rows[n][k] = [x^n y^k]; rows beyond `order` are dropped.
  static BivariateSeries from_rows(int order, std::vector<std::vector<Coeff>> rows);

  int order() const noexcept { return order_; }
  Coeff coeff(int n, int k) const noexcept;
  /// y-coefficients of the x^n row, without trailing zeros.
  const std::vector<Coeff>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
  /// Returns a copy with [x^n y^k] replaced by `value`.
  BivariateSeries with_coeff(int n, int k, Coeff value) const;

  bool is_zero() const noexcept;
  BivariateSeries truncated(int order) const;

  BivariateSeries operator-() const;
  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

  /// {"order":N,"coeffs":[[n,k,c],...]} listing nonzero entries only.
  std::string to_json() const;
  static BivariateSeries from_json(std::string_view text);
  /// One line per x-degree: "n: c_0 c_1 ... c_k".
  std::string to_triangle() const;

 private:
  void trim(std::size_t n);

  int order_;
  std::vector<std::vector<Coeff>> rows_;
};

/// a / b. The x^0 row of b must be the constant +1 or -1.
/// Throws Error{NonUnitDivisor}.
BivariateSeries divide(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries pow(const BivariateSeries& base, int exponent);

/// Polynomial in x with exact integer coefficients.
class XPolynomial {
 public:
  XPolynomial() = default;
  explicit XPolynomial(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double evaluate(double x) const;
  BivariateSeries to_series(int order) const;

  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// c_0 = c_1 = 1, c_k = c_{k-1} - x c_{k-2}; equals x^{k/2} U_k(1/(2 sqrt x)).
XPolynomial c_poly(int k);
/// U_k(z) from U_k(cos t) = sin((k+1)t) / sin t, continued to complex t.
double chebyshev_u(int k, double z);
/// Largest relative deviation between c_k(x0) and x0^{k/2} U_k(1/(2 sqrt x0))
/// over k in [0, max_k] and the given sample points.
double chebyshev_rewrite_error(int max_k, const std::vector<double>& samples);
/// Sample points and tolerance used for every Chebyshev cross-check.
inline const std::vector<double> kChebyshevSamples{0.01, 0.04, 0.1};
inline constexpr double kChebyshevTolerance = 1e-9;

/// Generating function of Dyck paths of height at most h: c_h / c_{h+1}.
BivariateSeries bounded_height_gf(int h, int order);
/// Independent oracle: transfer-matrix count of paths in C_n of height <= h.
std::uint64_t count_height_bounded(int n, int h);

/// Continued fraction of depth m evaluated at G:
/// 1/(1 - x y^[1 in R]/(1 - x y^[2 in R]/ ... /(1 - x y^[0 in R] G))).
BivariateSeries cf_evaluate(const ResidueSpec& spec, const BivariateSeries& g);
/// G^{(R;m)}: [x^n y^k] counts paths in C_n with k up steps at marked heights.
/// Fixed-point iteration from 1. Throws Error{NonConvergence} (never expected).
BivariateSeries cf_series(const ResidueSpec& spec, int order);
/// Same coefficients by exhaustive enumeration. Throws Error{CapExceeded}.
BivariateSeries brute_series(const ResidueSpec& spec, int order, const EnumerationCaps& caps = {});

/// xy(1-x)G^2 - (1-2x+xy)G + (1-x) truncated to G's order.
BivariateSeries quadratic_g03_residual(const BivariateSeries& g);
bool check_quadratic_g03(int order);

struct TheoremMainReport {
  int m = 0;
  int order = 0;
  /// G^{(m-1;m)} - y G^{(0;m)} - (1-y) c_{m-2}/c_{m-1}, expected zero.
  BivariateSeries difference;
  bool series_identity = false;
  bool higher_powers_vanish = false;
  bool coefficient_identities = false;
  bool chebyshev_validated = false;
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return series_identity && higher_powers_vanish && coefficient_identities && chebyshev_validated;
  }
};

TheoremMainReport check_theorem_main(int m, int order);

enum class SAryGf { P, E };

/// Functional equation right-hand side for P or E evaluated at `f`.
BivariateSeries sary_equation_rhs(int s, SAryGf which, const BivariateSeries& f);
/// Fixed-point solution of the functional equation for P (pyramid weight) or E
/// (exterior down steps). Throws Error{NonConvergence} (never expected).
BivariateSeries sary_series(int s, SAryGf which, int order);
/// Census of s-ary paths by pyramid weight (P) or exterior down steps (E).
BivariateSeries sary_brute(int s, SAryGf which, int order, const EnumerationCaps& caps = {});

struct CoefficientMismatch {
  int n = 0;
  int k = 0;
  BivariateSeries::Coeff lhs = 0;
  BivariateSeries::Coeff rhs = 0;
};

struct ConjectureReport {
  int part = 1;
  int m = 0;
  int order = 0;
  bool chebyshev_validated = false;
  double rewrite_error = 0.0;
  BivariateSeries lhs;
  BivariateSeries rhs;
  std::vector<CoefficientMismatch> mismatches;

  bool agrees() const noexcept { return chebyshev_validated && mismatches.empty(); }
  /// Summary line plus one line per mismatching coefficient.
  std::string to_text() const;
};

/// Part 1 (m >= 4): G^{(m-2;m)} - G^{(1;m)} against (1-y) x c_{m-4} / (c_{m-2} - x y c_{m-3}).
/// Part 2 (m >= 6): G^{(m-3;m)} - G^{(2;m)} against
///                  (1-y) x^2 c_{m-6} / (c_{m-2} - x y c_{m-4} + x^2 c_{m-5}).
/// Reports agreement; does not assert it. Throws Error{InvalidM}.
ConjectureReport check_conjecture(int part, int m, int order);

/// The conjectured right-hand side in its original Chebyshev form, evaluated
/// numerically (used to validate the polynomial rewriting).
double conjecture_rhs_chebyshev(int part, int m, double x, double y);
double conjecture_rhs_polynomial(int part, int m, double x, double y);

}  // namespace dyckstat
