#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "permdyck/genfun.hpp"
#include "permdyck/oracle.hpp"

using namespace permdyck;

namespace {
UniPolynomial U(std::vector<int> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return UniPolynomial(b);
}

// lbsum distribution read directly from the left border numbers.
UniPolynomial lbsum_by_enumeration(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
  for (const auto& p : oracle::all_permutations(n)) {
    int sum = 0;
    for (int a : oracle::left_borders(p)) sum += a;
    c[static_cast<std::size_t>(sum)] += 1;
  }
  return UniPolynomial(c);
}

QuadPolynomial joint_by_enumeration(int n) {
  QuadPolynomial g;
  for (const auto& p : oracle::all_permutations(n)) {
    int sum = 0;
    for (int a : oracle::left_borders(p)) sum += a;
    const auto d = oracle::descents(p);
    g.add_term({sum, static_cast<int>(d.size()), d.empty() ? 0 : d.back(), n - oracle::lrmax(p)}, 1);
  }
  return g;
}
}  // namespace

TEST_CASE("lbsum polynomials of small length") {
  CHECK(lbsum_polynomial(0) == U({1}));
  CHECK(lbsum_polynomial(1) == U({1}));
  CHECK(lbsum_polynomial(2) == U({1, 1}));
  CHECK(lbsum_polynomial(3) == U({1, 1, 3, 1}));
  CHECK_THROWS(lbsum_polynomial(-1));
}

TEST_CASE("parity table and tangent numbers") {
  const auto t = parity_table(12);
  CHECK(t.routes_agree());
  CHECK(t.delta[1] == 1);
  CHECK(t.delta[3] == 2);
  CHECK(t.delta[5] == 16);
  CHECK(t.delta[7] == 272);
  CHECK(t.delta[2] == 0);
  CHECK(t.delta[4] == 0);
  CHECK(t.delta[6] == 0);
  CHECK(t.even[3] == 4);
  CHECK(t.odd[3] == 2);
  CHECK(t.even[8] == 20160);
  CHECK(t.odd[8] == 20160);

  const auto T = tangent_numbers(5);
  CHECK(T == std::vector<BigInt>{1, 2, 16, 272, 7936});

  const auto th = tanh_series(7);
  CHECK(th[1] == 1);
  CHECK(th[3] == Rational(-1, 3));
  CHECK(th[5] == Rational(2, 15));
  CHECK(th[7] == Rational(-17, 315));
  CHECK(th[2] == 0);
}

TEST_CASE("four-variable polynomials of small length") {
  CHECK(quad_polynomial(0) == QuadPolynomial::constant(1));
  CHECK(quad_polynomial(1) == QuadPolynomial::constant(1));
  CHECK(quad_polynomial(2) == QuadPolynomial::constant(1) + QuadPolynomial::monomial(1, {1, 1, 1, 1}));
}

TEST_CASE("q-Catalan polynomials") {
  CHECK(q_catalan(0) == U({1}));
  CHECK(q_catalan(1) == U({1}));
  CHECK(q_catalan(3) == U({1, 1, 2, 1}));
  CHECK(q_catalan_shifted(3) == U({1, 2, 1, 1}));
  CHECK(q_catalan(10).evaluate(1) == catalan(10));
}

TEST_CASE("moments") {
  const auto m2 = moments(2);
  CHECK(m2.mean_closed_form == Rational(1, 2));
  CHECK(m2.variance_closed_form == Rational(1, 4));
  CHECK(m2.routes_agree());
  const auto m3 = moments(3);
  CHECK(m3.mean_closed_form == Rational(5, 3));
  CHECK(m3.variance_closed_form == Rational(8, 9));
  CHECK(m3.routes_agree());
  const auto m8 = moments(8);
  CHECK(m8.harmonic1 == Rational(761, 280));
  CHECK(m8.mean_closed_form == Rational(5471, 280));
  CHECK(m8.routes_agree());
  CHECK_THROWS_AS(moments(1), std::domain_error);
  CHECK(to_json(m2)["mean_closed_form"] == "1/2");
}

TEST_CASE("series identities") {
  const auto r = verify_series_identities(8);
  CHECK(r.functional_equation_holds);
  CHECK(r.tanh_identity_holds);
  REQUIRE(r.specialization.size() == 10);
  CHECK(r.specialization[0] == "1");
  CHECK(r.specialization[1] == "1");
  CHECK(r.specialization[3] == "-1/3");
  CHECK(r.specialization[5] == "2/15");
  CHECK(r.specialization[7] == "-17/315");
  CHECK(r.specialization == r.expected);
  CHECK(verify_series_identities(0).holds());
  CHECK(verify_series_identities(1).holds());
  CHECK_THROWS(verify_series_identities(11));
}

TEST_CASE("truncated series arithmetic") {
  TruncatedSeries a(3);
  a[0] = RationalQuadPolynomial::constant(1);
  a[1] = RationalQuadPolynomial::constant(1);
  const auto sq = a * a;
  CHECK(sq[2] == RationalQuadPolynomial::constant(1));
  CHECK(sq[1] == RationalQuadPolynomial::constant(2));
  CHECK(sq.derivative()[0] == RationalQuadPolynomial::constant(2));
  const auto scaled = a.scale_z({1, 0, 0, 0});
  CHECK(scaled[1] == RationalQuadPolynomial::monomial(1, {1, 0, 0, 0}));
  CHECK((a - a)[0].is_zero());
}

TEST_CASE("property: generating functions match enumeration, n <= 8") {
  const auto F = lbsum_polynomials(8);
  const auto G = quad_polynomials(8);
  for (int n = 0; n <= 8; ++n) {
    REQUIRE(F[static_cast<std::size_t>(n)] == lbsum_by_enumeration(n));
    REQUIRE(F[static_cast<std::size_t>(n)].evaluate(1) == factorial_big(n));
    REQUIRE(x_marginal(G[static_cast<std::size_t>(n)]) == F[static_cast<std::size_t>(n)]);
    if (n <= 7) REQUIRE(G[static_cast<std::size_t>(n)] == joint_by_enumeration(n));
  }
}

TEST_CASE("property: F_n(1) = n! and F_n(-1) is the parity difference, n <= 30") {
  const auto F = lbsum_polynomials(30);
  const auto t = parity_table(30);
  for (int n = 0; n <= 30; ++n) {
    const auto i = static_cast<std::size_t>(n);
    REQUIRE(F[i].evaluate(1) == factorial_big(n));
    REQUIRE(F[i].evaluate(-1) == t.delta[i]);
    REQUIRE(t.even[i] + t.odd[i] == factorial_big(n));
    if (n >= 2 && n % 2 == 0) REQUIRE(t.delta[i] == 0);
  }
  const auto T = tangent_numbers(15);
  for (int k = 1; k <= 15; ++k) REQUIRE(T[static_cast<std::size_t>(k - 1)] == t.delta[static_cast<std::size_t>(2 * k - 1)]);
}

TEST_CASE("property: q-Catalan is the inversion polynomial of 1-3-2 avoiders, n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    std::map<long long, int> dist;
    for (const auto& p : avoiders_132(n)) ++dist[oracle::inversions(p)];
    std::vector<int> c(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
    for (const auto& [k, v] : dist) c[static_cast<std::size_t>(k)] = v;
    REQUIRE(q_catalan(n) == U(c));
  }
  for (int n = 0; n <= 15; ++n) REQUIRE(q_catalan_shifted(n) == q_catalan(n).reversed());
}

TEST_CASE("property: moment routes agree, 2 <= n <= 50") {
  const auto F = lbsum_polynomials(50);
  for (int n = 2; n <= 50; ++n) REQUIRE(moments(n, F[static_cast<std::size_t>(n)]).routes_agree());
}
