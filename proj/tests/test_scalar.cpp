#include <complex>
#include <random>

#include "doctest.h"
#include "qcalc/cyclotomic.hpp"
#include "qcalc/ratq.hpp"

using namespace qcalc;

namespace {

Poly poly_from_longs(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(v);
}

}  // namespace

TEST_CASE("qnum basics") {
  CHECK(qnum(0).is_zero());
  CHECK(qnum(1) == RatQ(1));
  CHECK(qnum(3) == RatQ(poly_from_longs({1, 1, 1})));
  CHECK(qnum(3).str() == "q^2 + q + 1");
  CHECK_THROWS_AS(qnum(-1), std::domain_error);
}

TEST_CASE("qnum against (1 - q^m)/(1 - q)") {
  RatQ one_minus_q = RatQ(1) - RatQ::q();
  for (int m = 0; m <= 30; ++m)
    CHECK(qnum(m) * one_minus_q == RatQ(1) - RatQ::q_pow(m));
}

TEST_CASE("qfact basics and recurrence") {
  CHECK(qfact(0) == RatQ(1));
  CHECK(qfact(2) == RatQ(poly_from_longs({1, 1})));
  // direct polynomial multiplication: (1+q)(1+q+q^2)
  Poly direct = poly_from_longs({1, 1}) * poly_from_longs({1, 1, 1});
  CHECK(qfact(3) == RatQ(direct));
  CHECK(qfact(3) == RatQ(poly_from_longs({1, 2, 2, 1})));
  for (int m = 1; m <= 20; ++m) CHECK(qfact(m) == qfact(m - 1) * qnum(m));
  CHECK_THROWS_AS(qfact(-2), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly_from_longs({-1, 1}));
  CHECK(cyclotomic(3) == poly_from_longs({1, 1, 1}));
  CHECK(cyclotomic(5) == poly_from_longs({1, 1, 1, 1, 1}));
  Poly phi9 = cyclotomic(9);
  CHECK(phi9 == poly_from_longs({1, 0, 0, 1, 0, 0, 1}));
  CHECK(phi9.degree() == 6);  // euler phi(9)
  Poly q9_minus_1 = Poly::monomial(1, 9) - Poly(Rational(1));
  CHECK(q9_minus_1.divrem(phi9).second.is_zero());
  Poly q3_minus_1 = Poly::monomial(1, 3) - Poly(Rational(1));
  CHECK_FALSE(q3_minus_1.divrem(phi9).second == Poly());
}

TEST_CASE("eval_at_root examples") {
  CycloNum z3 = eval_at_root(RatQ::q(), 3);
  CHECK(z3 == CycloNum::zeta(3));
  CHECK(z3.coeffs() == std::vector<Rational>{Rational(0), Rational(1)});

  // 1/(1-q) at zeta_3 equals (2 + zeta)/3
  RatQ x(Poly(Rational(1)), Poly({Rational(1), Rational(-1)}));
  CycloNum v = eval_at_root(x, 3);
  CHECK(v.coeffs() == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
  std::complex<double> expect =
      1.0 / (1.0 - std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0));
  CHECK(std::abs(v.to_complex() - expect) < 1e-12);

  // Phi_3 divides the numerator: value 0, no pole
  CHECK(eval_at_root(qnum(3), 3).is_zero());
  CHECK_THROWS_AS(eval_at_root(qnum(3).inverse(), 3), PoleAtRoot);
}

TEST_CASE("qnum vanishing pattern at roots") {
  for (int n = 3; n <= 15; n += 2) {
    CHECK(eval_at_root(qnum(n), n).is_zero());
    for (int p = 1; p < n; ++p) CHECK_FALSE(eval_at_root(qnum(p), n).is_zero());
  }
}

TEST_CASE("q_half is the square root of q in Q(zeta_n)") {
  CHECK(q_half(3) == CycloNum::zeta_pow(3, 2));
  CHECK(q_half(5) == CycloNum::zeta_pow(5, 3));
  for (int n = 3; n <= 15; n += 2)
    CHECK(q_half(n) * q_half(n) == CycloNum::zeta(n));
  CHECK_THROWS_AS(q_half(4), std::domain_error);
}

TEST_CASE("CycloNum rendering and inversion") {
  CHECK(CycloNum::zeta(3).str() == "[0, 1] mod Phi_3");
  std::mt19937_64 rng(7);
  for (int n : {3, 5, 9}) {
    for (int trial = 0; trial < 20; ++trial) {
      Poly p;
      for (int d = 0; d < cyclotomic(n).degree(); ++d)
        p += Poly::monomial(Rational(static_cast<long>(rng() % 7) - 3), d);
      CycloNum v(n, p);
      if (v.is_zero()) continue;
      CHECK(v * v.inverse() == CycloNum(n, Rational(1)));
    }
  }
}

TEST_CASE("RatQ is a field on random elements") {
  std::mt19937_64 rng(11);
  auto random_poly = [&rng]() {
    Poly p;
    for (int d = 0; d <= 3; ++d)
      p += Poly::monomial(Rational(static_cast<long>(rng() % 9) - 4), d);
    return p;
  };
  int done = 0;
  while (done < 200) {
    Poly num = random_poly(), den = random_poly();
    if (num.is_zero() || den.is_zero()) continue;
    RatQ x(num, den);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == RatQ(1));
    CHECK((x + x) - x == x);
    ++done;
  }
}

TEST_CASE("RatQ canonical form") {
  // (q^2 - 1)/(q - 1) reduces to the monic-denominator canonical q + 1
  RatQ x(poly_from_longs({-1, 0, 1}), poly_from_longs({-1, 1}));
  CHECK(x == RatQ(poly_from_longs({1, 1})));
  CHECK(x.den().is_one());
  // denominator is made monic
  RatQ y(Poly(Rational(1)), poly_from_longs({0, 2}));
  CHECK(y.den().lead() == 1);
  CHECK(y * RatQ::q() == RatQ(Rational(1, 2)));
  CHECK(RatQ().str() == "0");
  CHECK(y.str() == "(1/2) / (q)");
}
