#pragma once

// Generating functions for the left border sum and its refinements: the
// recursion for F_n, parity counts and tangent numbers, the four-variable
// polynomials G_n, q-Catalan polynomials, moments, and a truncated check of
// the functional equation for the exponential generating function g.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permdyck/polynomial.hpp"

namespace permdyck {

BigInt factorial_big(int n);

/// F_0..F_{n_max}: F_n = sum_k C(n-1,k-1) F_{k-1} F_{n-k} x^{k(n-k)}.
std::vector<UniPolynomial> lbsum_polynomials(int n_max);
UniPolynomial lbsum_polynomial(int n);

struct ParityTable {
  std::vector<BigInt> even;   // e_n
  std::vector<BigInt> odd;    // o_n
  std::vector<BigInt> delta;  // e_n - o_n from the even/odd recursion
  std::vector<BigInt> delta_recursive;  // from the recursion for the difference alone

  bool routes_agree() const { return delta == delta_recursive; }
};

ParityTable parity_table(int n_max);

/// Exact Taylor coefficients of tanh(z) through z^order, as sinh/cosh.
std::vector<Rational> tanh_series(int order);

/// T_1..T_m: |[z^{2k-1}] tanh(z)| * (2k-1)!.
std::vector<BigInt> tangent_numbers(int m);

/// G_0..G_{n_max} in (x, y, p, q) for (lbsum, des, maxdes, n - lrmax).
std::vector<QuadPolynomial> quad_polynomials(int n_max);
QuadPolynomial quad_polynomial(int n);

/// Inversion polynomial over 1-3-2 avoiders: C_n = sum_k C_{k-1} C_{n-k} q^{k(n-k)}.
UniPolynomial q_catalan(int n);

/// The variant C_n = sum_k C_{k-1} C_{n-k} q^{k-1}; it yields the degree reversal of q_catalan.
UniPolynomial q_catalan_shifted(int n);

struct MomentReport {
  int n = 0;
  Rational harmonic1;  // H_{n,1}
  Rational harmonic2;  // H_{n,2}
  Rational mean_closed_form;
  Rational variance_closed_form;
  Rational mean_from_polynomial;
  Rational variance_from_polynomial;

  bool routes_agree() const {
    return mean_closed_form == mean_from_polynomial && variance_closed_form == variance_from_polynomial;
  }
};

/// n >= 2; throws std::domain_error otherwise.
MomentReport moments(int n);
MomentReport moments(int n, const UniPolynomial& lbsum_poly);

/// Power series in z truncated after z^order, with coefficients in Q[x,y,p,q].
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RationalQuadPolynomial& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  RationalQuadPolynomial& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  TruncatedSeries truncated(int order) const;
  TruncatedSeries derivative() const;
  /// z -> m z, where m is the monomial with the given exponents.
  TruncatedSeries scale_z(Exponents m) const;
  TruncatedSeries at_one(Var v) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<RationalQuadPolynomial> coeffs_;
};

/// g = sum_n x^{C(n,2)} z^n G_n(1/x, y, p, q) / n!, truncated after z^order.
TruncatedSeries lbsum_egf(int order);

struct SeriesReport {
  int order = 0;
  bool functional_equation_holds = true;
  std::optional<int> functional_first_failure;
  std::string functional_residual;  // residual at the first failing order
  bool tanh_identity_holds = true;
  std::optional<int> tanh_first_failure;
  std::vector<std::string> specialization;  // [z^k] g(-1,1,1,1,z), k = 0..order+1
  std::vector<std::string> expected;        // [z^k] (1 + tanh z)

  bool holds() const { return functional_equation_holds && tanh_identity_holds; }
};

/// Checks dg/dz = g(xz) - y p g(p=1, xpz) (1 - g(q=1, qz)) at z^0..z^order and
/// g(-1,1,1,1,z) = 1 + tanh z at z^0..z^(order+1). order must be in 0..10.
SeriesReport verify_series_identities(int order);

nlohmann::json to_json(const ParityTable& t);
nlohmann::json to_json(const MomentReport& m);
nlohmann::json to_json(const SeriesReport& r);

}  // namespace permdyck
