#include <doctest.h>

#include "permdyck/polynomial.hpp"

using namespace permdyck;

namespace {
UniPolynomial U(std::vector<int> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return UniPolynomial(b);
}
}  // namespace

TEST_CASE("univariate arithmetic") {
  const auto a = U({1, 1});
  const auto b = U({1, -1});
  CHECK(a * b == U({1, 0, -1}));
  CHECK(a + b == U({2}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(U({0, 0, 0}).is_zero());
  CHECK(U({1, 2, 0}).degree() == 1);
  CHECK(a.scaled(3, 2) == U({0, 0, 3, 3}));
  CHECK(U({1, 1, 3, 1}).evaluate(-1) == 2);
  CHECK(U({1, 1, 3, 1}).derivative_at_one(1) == 10);
  CHECK(U({1, 1, 3, 1}).derivative_at_one(2) == 12);
  CHECK(U({1, 1, 2, 1}).reversed() == U({1, 2, 1, 1}));
  CHECK(U({1, 0, 3}).coefficient(1) == 0);
  CHECK(U({1, 0, 3}).coefficient(7) == 0);
}

TEST_CASE("univariate formatting") {
  CHECK(U({1, 1, 3, 1}).to_string() == "1 + x + 3x^2 + x^3");
  CHECK(U({0, 2}).to_string('q') == "2q");
  CHECK(U({}).to_string() == "0");
  const auto j = U({1, 0, 5}).to_json();
  CHECK(j.size() == 2);
  CHECK(j["2"] == "5");
}

TEST_CASE("big coefficients stay exact") {
  BigInt big = 1;
  for (int i = 1; i <= 30; ++i) big *= i;
  const auto p = UniPolynomial::monomial(big, 3);
  CHECK(p.coefficient(3) == big);
  CHECK((p * p).coefficient(6) == big * big);
  CHECK(p.to_json()["3"] == big.str());
}

TEST_CASE("four-variable polynomials") {
  const auto one = QuadPolynomial::constant(1);
  const auto m = QuadPolynomial::monomial(1, {1, 1, 1, 1});
  const auto g = one + m;
  CHECK(g.size() == 2);
  CHECK(g.coefficient({1, 1, 1, 1}) == 1);
  CHECK((g - g).is_zero());
  CHECK((g * g).coefficient({1, 1, 1, 1}) == 2);
  CHECK(g.at_one(Var::y).coefficient({1, 0, 1, 1}) == 1);
  CHECK(g.evaluate(2, 3, 5, 7) == 1 + 2 * 3 * 5 * 7);
  CHECK(x_marginal(g) == U({1, 1}));
  CHECK(to_string(g) == "1 + xypq");
  CHECK(to_json(g)["1,1,1,1"] == "1");
  const auto r = g.convert<Rational>().times(Rational(1, 2), {0, 0, 0, 1});
  CHECK(r.coefficient({1, 1, 1, 2}) == Rational(1, 2));
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(-17, 315)) == "-17/315");
  CHECK(to_string(Rational(4, 2)) == "2");
}
