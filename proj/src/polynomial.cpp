#include "permdyck/polynomial.hpp"

#include <algorithm>

namespace permdyck {

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

UniPolynomial::UniPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPolynomial UniPolynomial::constant(BigInt c) { return UniPolynomial({std::move(c)}); }

UniPolynomial UniPolynomial::monomial(BigInt c, int exponent) {
  std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = std::move(c);
  return UniPolynomial(std::move(v));
}

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UniPolynomial::coefficient(int e) const {
  if (e < 0 || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e)];
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return UniPolynomial(std::move(v));
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPolynomial(std::move(v));
}

UniPolynomial UniPolynomial::scaled(const BigInt& c, int shift) const {
  if (is_zero() || c == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(shift) + coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(shift)] = coeffs_[i] * c;
  return UniPolynomial(std::move(v));
}

BigInt UniPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt UniPolynomial::derivative_at_one(int k) const {
  BigInt total = 0;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (static_cast<int>(e) < k) continue;
    BigInt falling = 1;
    for (int t = 0; t < k; ++t) falling *= static_cast<int>(e) - t;
    total += falling * coeffs_[e];
  }
  return total;
}

UniPolynomial UniPolynomial::reversed() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return UniPolynomial(std::move(v));
}

std::string UniPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (e == 0 || mag != 1) out += mag.str();
    if (e >= 1) out += var;
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

nlohmann::json UniPolynomial::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) j[std::to_string(e)] = coeffs_[e].str();
  return j;
}

UniPolynomial x_marginal(const QuadPolynomial& g) {
  std::vector<BigInt> v;
  for (const auto& [e, c] : g.terms()) {
    if (static_cast<std::size_t>(e.x) >= v.size()) v.resize(static_cast<std::size_t>(e.x) + 1);
    v[static_cast<std::size_t>(e.x)] += c;
  }
  return UniPolynomial(std::move(v));
}

namespace {

template <class Coeff, class Fmt>
std::string format_multi(const MultiPolynomial<Coeff>& g, Fmt fmt) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : g.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    auto var = [&](char v, int k) {
      if (k == 0) return;
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var('x', e.x);
    var('y', e.y);
    var('p', e.p);
    var('q', e.q);
    std::string coeff = fmt(c);
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += "(" + coeff + ")" + mono;
  }
  return out;
}

}  // namespace

std::string to_string(const QuadPolynomial& g) {
  return format_multi(g, [](const BigInt& c) { return c.str(); });
}

std::string to_string(const RationalQuadPolynomial& g) {
  return format_multi(g, [](const Rational& c) { return to_string(c); });
}

nlohmann::json to_json(const QuadPolynomial& g) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : g.terms()) {
    j[std::to_string(e.x) + "," + std::to_string(e.y) + "," + std::to_string(e.p) + "," + std::to_string(e.q)] =
        c.str();
  }
  return j;
}

}  // namespace permdyck
