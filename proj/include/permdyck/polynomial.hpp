#pragma once

// Exact polynomial carriers: a dense univariate polynomial over big integers
// and a sparse polynomial in the four variables x, y, p, q.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace permdyck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);  // "p/q", or "p" for integers

class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<BigInt> coefficients);
  static UniPolynomial constant(BigInt c);
  static UniPolynomial monomial(BigInt c, int exponent);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int e) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  UniPolynomial& operator+=(const UniPolynomial& o);
  friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
  friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);

  /// Multiplies by c * x^shift.
  UniPolynomial scaled(const BigInt& c, int shift = 0) const;

  BigInt evaluate(const BigInt& x) const;

  /// k-th derivative at x = 1.
  BigInt derivative_at_one(int k) const;

  /// x^degree * P(1/x).
  UniPolynomial reversed() const;

  std::string to_string(char var = 'x') const;
  /// {"exponent": "coefficient"} with zero coefficients omitted.
  nlohmann::json to_json() const;

  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct Exponents {
  int x = 0, y = 0, p = 0, q = 0;

  friend Exponents operator+(Exponents a, Exponents b) { return {a.x + b.x, a.y + b.y, a.p + b.p, a.q + b.q}; }
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

enum class Var { x, y, p, q };

/// Sparse polynomial in x, y, p, q; zero coefficients are never stored.
template <class Coeff>
class MultiPolynomial {
 public:
  using Terms = std::map<Exponents, Coeff>;

  MultiPolynomial() = default;
  static MultiPolynomial constant(Coeff c) { return monomial(std::move(c), {}); }
  static MultiPolynomial monomial(Coeff c, Exponents e) {
    MultiPolynomial r;
    r.add_term(e, c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(Exponents e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Exponents e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPolynomial& operator+=(const MultiPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPolynomial& operator-=(const MultiPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }

  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    MultiPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  MultiPolynomial times(const Coeff& c, Exponents shift = {}) const {
    MultiPolynomial r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, k * c);
    return r;
  }

  /// Sets one variable to 1.
  MultiPolynomial at_one(Var v) const {
    MultiPolynomial r;
    for (const auto& [key, c] : terms_) {
      Exponents e = key;
      switch (v) {
        case Var::x: e.x = 0; break;
        case Var::y: e.y = 0; break;
        case Var::p: e.p = 0; break;
        case Var::q: e.q = 0; break;
      }
      r.add_term(e, c);
    }
    return r;
  }

  template <class F>
  MultiPolynomial map_exponents(F&& f) const {
    MultiPolynomial r;
    for (const auto& [e, c] : terms_) r.add_term(f(e), c);
    return r;
  }

  template <class To>
  MultiPolynomial<To> convert() const {
    MultiPolynomial<To> r;
    for (const auto& [e, c] : terms_) r.add_term(e, To(c));
    return r;
  }

  Coeff evaluate(const Coeff& x, const Coeff& y, const Coeff& p, const Coeff& q) const {
    auto pw = [](Coeff b, int k) {
      Coeff r = 1;
      while (k-- > 0) r *= b;
      return r;
    };
    Coeff total = 0;
    for (const auto& [e, c] : terms_) total += c * pw(x, e.x) * pw(y, e.y) * pw(p, e.p) * pw(q, e.q);
    return total;
  }

  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  Terms terms_;
};

using QuadPolynomial = MultiPolynomial<BigInt>;
using RationalQuadPolynomial = MultiPolynomial<Rational>;

/// Collapses y, p, q to 1.
UniPolynomial x_marginal(const QuadPolynomial& g);

std::string to_string(const QuadPolynomial& g);
std::string to_string(const RationalQuadPolynomial& g);

/// {"x,y,p,q": "coefficient"}
nlohmann::json to_json(const QuadPolynomial& g);

}  // namespace permdyck
