#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "coronae/polynomial.hpp"

using namespace coronae;

TEST_CASE("basic arithmetic") {
  const Polynomial x2({0, 0, 1});
  REQUIRE(x2.shift(0.5).approx_equal(Polynomial({0.25, -1.0, 1.0}), 1e-14));

  const Polynomial prod = Polynomial({-1, 1}) * Polynomial({1, 1});
  REQUIRE(prod.approx_equal(Polynomial({-1, 0, 1}), 1e-14));

  REQUIRE((x2 + (-1.0) * x2).is_zero());
  REQUIRE(Polynomial({1, 2, 3}).derivative().approx_equal(Polynomial({2, 6}), 1e-14));
  REQUIRE(Polynomial({2, 4}).monic().approx_equal(Polynomial({0.5, 1}), 1e-14));
}

TEST_CASE("division and deflation") {
  const Polynomial p = Polynomial::from_roots({1.0, 2.0, 3.0});
  auto [q, r] = p.divide(Polynomial::from_root(2.0));
  REQUIRE(r.max_abs_coeff() < 1e-12);
  REQUIRE(q.approx_equal(Polynomial::from_roots({1.0, 3.0}), 1e-12));
  REQUIRE(p.deflate(3.0).approx_equal(Polynomial::from_roots({1.0, 2.0}), 1e-12));
  REQUIRE_THROWS_AS(p.divide(Polynomial::zero()), DivisionByZeroFunction);

  // remainder carries p(c) information: divide by (x - 5)
  auto [q2, r2] = p.divide(Polynomial::from_root(5.0));
  REQUIRE(std::abs(r2.eval(0.0) - p.eval(5.0)) < 1e-10);
  (void)q2;
}

TEST_CASE("real roots") {
  {
    const Spectrum s = real_roots(Polynomial({-2, -1, 1}));  // x^2 - x - 2
    REQUIRE(s.pairs.size() == 2);
    REQUIRE(s.pairs[0].first == Catch::Approx(-1.0));
    REQUIRE(s.pairs[1].first == Catch::Approx(2.0));
  }
  {
    const Spectrum s = real_roots(Polynomial({-4, -5, 0, 1}));  // x^3 - 5x - 4
    REQUIRE(s.total() == 3);
    const auto v = s.flatten();
    REQUIRE(v[0] == Catch::Approx((1 - std::sqrt(17.0)) / 2).margin(1e-10));
    REQUIRE(v[1] == Catch::Approx(-1.0).margin(1e-10));
    REQUIRE(v[2] == Catch::Approx((1 + std::sqrt(17.0)) / 2).margin(1e-10));
  }
  {
    const Spectrum s = real_roots(Polynomial::from_root(0.7).pow(3));
    REQUIRE(s.pairs.size() == 1);
    REQUIRE(s.pairs[0].second == 3);
    REQUIRE(s.pairs[0].first == Catch::Approx(0.7).margin(1e-6));
  }
  REQUIRE_THROWS_AS(real_roots(Polynomial({1, 0, 1})), ComplexRootsDetected);
  REQUIRE_THROWS_AS(real_roots(Polynomial({1, 0, 0, 0, 1})), ComplexRootsDetected);
  REQUIRE_THROWS_AS(real_roots(Polynomial::zero()), BadParams);
}

TEST_CASE("rational functions") {
  // (2x + 2) / ((x-1)(x+1)) -> 2 / (x-1)
  const RationalFunction f(Polynomial({2, 2}), Polynomial::from_roots({1.0, -1.0}));
  const RationalFunction g = f.reduce();
  REQUIRE(g.den().degree() == 1);
  REQUIRE(std::abs(g.eval(3.0) - 1.0) < 1e-12);

  const RationalFunction inv_x(Polynomial::constant(1.0), Polynomial::x());
  const RationalFunction sum = inv_x + inv_x;
  REQUIRE(std::abs(sum.eval(4.0) - 0.5) < 1e-12);

  const RationalFunction p_over_q(Polynomial({1, 2}), Polynomial({-3, 0, 1}));
  const RationalFunction one = (p_over_q * p_over_q.reciprocal()).reduce();
  REQUIRE(one.num().degree() == 0);
  REQUIRE(one.den().degree() == 0);
  REQUIRE(std::abs(one.eval(2.0) - 1.0) < 1e-12);

  REQUIRE_THROWS_AS(RationalFunction(Polynomial::x(), Polynomial::zero()),
                    DivisionByZeroFunction);
  REQUIRE_THROWS_AS(RationalFunction(Polynomial::zero(), Polynomial::x()).reciprocal(),
                    DivisionByZeroFunction);
}

TEST_CASE("factored polynomials") {
  FactoredCharPoly f1;
  f1.factors = {{Polynomial::from_root(1.0), 2}};
  REQUIRE(f1.total_degree() == 2);
  REQUIRE(f1.expand().approx_equal(Polynomial({1, -2, 1}), 1e-12));

  FactoredCharPoly f2;
  f2.factors = {{Polynomial({-1, 0, 1}), 1}, {Polynomial::x(), 3}};
  REQUIRE(f2.total_degree() == 5);
  REQUIRE(f2.expand().approx_equal(Polynomial({0, 0, 0, -1, 0, 1}), 1e-12));
}
