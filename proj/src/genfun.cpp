#include "permdyck/genfun.hpp"

#include <stdexcept>

#include "permdyck/dyck.hpp"

namespace permdyck {

namespace {

void require_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw std::out_of_range(std::string(what) + ": argument " + std::to_string(value) + " outside " +
                            std::to_string(lo) + ".." + std::to_string(hi));
  }
}

}  // namespace

BigInt factorial_big(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<UniPolynomial> lbsum_polynomials(int n_max) {
  require_range(n_max, 0, 60, "lbsum_polynomials");
  std::vector<UniPolynomial> F;
  F.reserve(static_cast<std::size_t>(n_max) + 1);
  F.push_back(UniPolynomial::constant(1));
  for (int n = 1; n <= n_max; ++n) {
    UniPolynomial total;
    for (int k = 1; k <= n; ++k) {
      const auto& left = F[static_cast<std::size_t>(k - 1)];
      const auto& right = F[static_cast<std::size_t>(n - k)];
      total += (left * right).scaled(binomial(n - 1, k - 1), k * (n - k));
    }
    F.push_back(std::move(total));
  }
  return F;
}

UniPolynomial lbsum_polynomial(int n) { return lbsum_polynomials(n).back(); }

ParityTable parity_table(int n_max) {
  require_range(n_max, 0, 40, "parity_table");
  ParityTable t;
  t.even.assign(static_cast<std::size_t>(n_max) + 1, 0);
  t.odd.assign(static_cast<std::size_t>(n_max) + 1, 0);
  t.even[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt e = 0, o = 0;
    for (int k = 1; k <= n; ++k) {
      const auto a = static_cast<std::size_t>(k - 1), b = static_cast<std::size_t>(n - k);
      const BigInt c = binomial(n - 1, k - 1);
      const BigInt same = t.even[a] * t.even[b] + t.odd[a] * t.odd[b];
      const BigInt mixed = t.even[a] * t.odd[b] + t.odd[a] * t.even[b];
      // lbsum = lbsum(left) + lbsum(right) + k(n-k)
      if ((k * (n - k)) % 2 == 0) {
        e += c * same;
        o += c * mixed;
      } else {
        e += c * mixed;
        o += c * same;
      }
    }
    t.even[static_cast<std::size_t>(n)] = e;
    t.odd[static_cast<std::size_t>(n)] = o;
  }
  for (int n = 0; n <= n_max; ++n) t.delta.push_back(t.even[static_cast<std::size_t>(n)] - t.odd[static_cast<std::size_t>(n)]);

  auto& d = t.delta_recursive;
  d.assign(static_cast<std::size_t>(n_max) + 1, 0);
  d[0] = 1;
  if (n_max >= 1) d[1] = 1;
  for (int n = 3; n <= n_max; n += 2) {
    BigInt s = 0;
    for (int k = 2; k <= n - 1; k += 2) {
      s += binomial(n - 1, k - 1) * d[static_cast<std::size_t>(k - 1)] * d[static_cast<std::size_t>(n - k)];
    }
    d[static_cast<std::size_t>(n)] = s;
  }
  return t;
}

std::vector<Rational> tanh_series(int order) {
  require_range(order, 0, 64, "tanh_series");
  std::vector<Rational> sinh(static_cast<std::size_t>(order) + 1), cosh(sinh.size()), t(sinh.size());
  for (int k = 0; k <= order; ++k) {
    Rational inv_fact(BigInt(1), factorial_big(k));
    (k % 2 ? sinh : cosh)[static_cast<std::size_t>(k)] = inv_fact;
  }
  for (int k = 0; k <= order; ++k) {
    Rational acc = sinh[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) acc -= cosh[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(k - j)];
    t[static_cast<std::size_t>(k)] = acc / cosh[0];
  }
  return t;
}

std::vector<BigInt> tangent_numbers(int m) {
  require_range(m, 0, 15, "tangent_numbers");
  const auto t = tanh_series(std::max(2 * m - 1, 0));
  std::vector<BigInt> out;
  for (int k = 1; k <= m; ++k) {
    Rational c = t[static_cast<std::size_t>(2 * k - 1)] * Rational(factorial_big(2 * k - 1));
    if (c < 0) c = -c;
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

std::vector<QuadPolynomial> quad_polynomials(int n_max) {
  require_range(n_max, 0, 25, "quad_polynomials");
  std::vector<QuadPolynomial> G;
  std::vector<QuadPolynomial> without_p, without_q;  // G_k(x,y,1,q), G_k(x,y,p,1)
  auto push = [&](QuadPolynomial g) {
    without_p.push_back(g.at_one(Var::p));
    without_q.push_back(g.at_one(Var::q));
    G.push_back(std::move(g));
  };
  push(QuadPolynomial::constant(1));
  if (n_max >= 1) push(QuadPolynomial::constant(1));
  for (int n = 2; n <= n_max; ++n) {
    // n in last position: nothing changes. Otherwise n at position k < n adds
    // k(n-k) to lbsum, one descent at k, shifts the right part's descents by k
    // and makes all n-k entries on its right non-maxima.
    QuadPolynomial g = G.back();
    for (int k = 1; k <= n - 1; ++k) {
      const auto prod = without_p[static_cast<std::size_t>(k - 1)] * without_q[static_cast<std::size_t>(n - k)];
      g += prod.times(binomial(n - 1, k - 1), Exponents{k * (n - k), 1, k, n - k});
    }
    push(std::move(g));
  }
  return G;
}

QuadPolynomial quad_polynomial(int n) { return quad_polynomials(n).back(); }

namespace {

template <class ShiftFn>
UniPolynomial catalan_recursion(int n, ShiftFn shift) {
  std::vector<UniPolynomial> C{UniPolynomial::constant(1)};
  for (int m = 1; m <= n; ++m) {
    UniPolynomial total;
    for (int k = 1; k <= m; ++k) {
      total += (C[static_cast<std::size_t>(k - 1)] * C[static_cast<std::size_t>(m - k)]).scaled(1, shift(m, k));
    }
    C.push_back(std::move(total));
  }
  return C.back();
}

}  // namespace

UniPolynomial q_catalan(int n) {
  require_range(n, 0, 30, "q_catalan");
  return catalan_recursion(n, [](int m, int k) { return k * (m - k); });
}

UniPolynomial q_catalan_shifted(int n) {
  require_range(n, 0, 30, "q_catalan_shifted");
  return catalan_recursion(n, [](int, int k) { return k - 1; });
}

MomentReport moments(int n, const UniPolynomial& F) {
  if (n < 2) throw std::domain_error("moments: requires n >= 2");
  MomentReport r;
  r.n = n;
  for (int i = 1; i <= n; ++i) {
    r.harmonic1 += Rational(BigInt(1), BigInt(i));
    r.harmonic2 += Rational(BigInt(1), BigInt(i) * i);
  }
  const Rational N(n);
  r.mean_closed_form = (N + 1) * (N / 2 - r.harmonic1) + N;
  r.variance_closed_form = 2 * N * (N + 2) - (N + 1) * r.harmonic1 - (N + 1) * (N + 1) * r.harmonic2;

  const Rational total(factorial_big(n));
  const Rational first = Rational(F.derivative_at_one(1)) / total;
  const Rational falling2 = Rational(F.derivative_at_one(2)) / total;
  r.mean_from_polynomial = first;
  r.variance_from_polynomial = falling2 + first - first * first;
  return r;
}

MomentReport moments(int n) {
  if (n < 2) throw std::domain_error("moments: requires n >= 2");
  return moments(n, lbsum_polynomial(n));
}

TruncatedSeries::TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries r(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) r[k] = (*this)[k];
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries r(std::max(order() - 1, 0));
  for (int k = 1; k <= order(); ++k) r[k - 1] = (*this)[k].times(Rational(k));
  return r;
}

TruncatedSeries TruncatedSeries::scale_z(Exponents m) const {
  TruncatedSeries r(order());
  for (int k = 0; k <= order(); ++k) r[k] = (*this)[k].times(Rational(1), Exponents{k * m.x, k * m.y, k * m.p, k * m.q});
  return r;
}

TruncatedSeries TruncatedSeries::at_one(Var v) const {
  TruncatedSeries r(order());
  for (int k = 0; k <= order(); ++k) r[k] = (*this)[k].at_one(v);
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries lbsum_egf(int order) {
  require_range(order, 0, 11, "lbsum_egf");
  const auto G = quad_polynomials(order);
  TruncatedSeries g(order);
  for (int n = 0; n <= order; ++n) {
    const int top = n * (n - 1) / 2;
    const auto flipped = G[static_cast<std::size_t>(n)].map_exponents([top](Exponents e) {
      e.x = top - e.x;
      return e;
    });
    g[n] = flipped.convert<Rational>().times(Rational(BigInt(1), factorial_big(n)));
  }
  return g;
}

SeriesReport verify_series_identities(int order) {
  require_range(order, 0, 10, "verify_series_identities");
  SeriesReport report;
  report.order = order;

  const TruncatedSeries g = lbsum_egf(order + 1);
  const TruncatedSeries lhs = g.derivative();

  TruncatedSeries one(order);
  one[0] = RationalQuadPolynomial::constant(1);
  const auto shifted = g.scale_z({1, 0, 0, 0}).truncated(order);
  const auto left_part = g.at_one(Var::p).scale_z({1, 0, 1, 0}).truncated(order);
  const auto right_part = g.at_one(Var::q).scale_z({0, 0, 0, 1}).truncated(order);
  TruncatedSeries correction = left_part * (one - right_part);
  for (int k = 0; k <= order; ++k) correction[k] = correction[k].times(Rational(1), Exponents{0, 1, 1, 0});
  const auto residual = lhs - (shifted - correction);

  for (int k = 0; k <= order; ++k) {
    if (!residual[k].is_zero()) {
      report.functional_equation_holds = false;
      report.functional_first_failure = k;
      report.functional_residual = to_string(residual[k]);
      break;
    }
  }

  const auto tanh = tanh_series(order + 1);
  for (int k = 0; k <= order + 1; ++k) {
    const Rational got = g[k].evaluate(Rational(-1), Rational(1), Rational(1), Rational(1));
    const Rational want = tanh[static_cast<std::size_t>(k)] + (k == 0 ? Rational(1) : Rational(0));
    report.specialization.push_back(to_string(got));
    report.expected.push_back(to_string(want));
    if (got != want && report.tanh_identity_holds) {
      report.tanh_identity_holds = false;
      report.tanh_first_failure = k;
    }
  }
  return report;
}

nlohmann::json to_json(const ParityTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n < t.even.size(); ++n) {
    rows.push_back({{"n", n},
                    {"even", t.even[n].str()},
                    {"odd", t.odd[n].str()},
                    {"delta", t.delta[n].str()},
                    {"delta_recursive", t.delta_recursive[n].str()}});
  }
  return {{"routes_agree", t.routes_agree()}, {"rows", rows}};
}

nlohmann::json to_json(const MomentReport& m) {
  return {{"n", m.n},
          {"H1", to_string(m.harmonic1)},
          {"H2", to_string(m.harmonic2)},
          {"mean_closed_form", to_string(m.mean_closed_form)},
          {"variance_closed_form", to_string(m.variance_closed_form)},
          {"mean_from_polynomial", to_string(m.mean_from_polynomial)},
          {"variance_from_polynomial", to_string(m.variance_from_polynomial)},
          {"routes_agree", m.routes_agree()}};
}

nlohmann::json to_json(const SeriesReport& r) {
  nlohmann::json j = {{"order", r.order},
                      {"functional_equation_holds", r.functional_equation_holds},
                      {"tanh_identity_holds", r.tanh_identity_holds},
                      {"specialization", r.specialization},
                      {"expected", r.expected}};
  if (r.functional_first_failure) {
    j["functional_first_failure"] = *r.functional_first_failure;
    j["functional_residual"] = r.functional_residual;
  }
  if (r.tanh_first_failure) j["tanh_first_failure"] = *r.tanh_first_failure;
  return j;
}

}  // namespace permdyck
