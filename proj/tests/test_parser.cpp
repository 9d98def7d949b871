#include "doctest.h"
#include "qcalc/eval.hpp"
#include "qcalc/parser.hpp"

using namespace qcalc;

TEST_CASE("parsing and evaluating the defining relation") {
  GradedElem v = eval_generic(*parse("D*theta - q*theta*D"));
  CHECK(v == GradedElem::one());
  // the unicode minus sign is accepted too
  GradedElem u = eval_generic(*parse("D*theta \xe2\x88\x92 q*theta*D"));
  CHECK(u == GradedElem::one());
}

TEST_CASE("bracket node with a divided power") {
  GradedElem v = eval_generic(*parse("[D, be(theta,2)]"));
  CHECK(v == GradedElem::generator(Gen::Theta));
}

TEST_CASE("syntax errors carry offsets and expectations") {
  try {
    parse("qnum(3");
    FAIL("expected a ParseError");
  } catch (const ParseError& pe) {
    CHECK(pe.offset == 7);
    REQUIRE(pe.expected.size() == 1);
    CHECK(pe.expected[0] == "')'");
    CHECK(pe.found == "end of input");
  }
  try {
    parse("qnum(3) + ");
    FAIL("expected a ParseError");
  } catch (const ParseError& pe) {
    CHECK(pe.offset == 11);
  }
  CHECK_THROWS_AS(parse("theta^(2)"), ParseError);  // literal exponents only
  CHECK_THROWS_AS(parse("foo(3)"), ParseError);
  CHECK_THROWS_AS(parse("2 theta"), ParseError);  // no juxtaposition
}

TEST_CASE("print/parse round trip") {
  const char* corpus[] = {
      "q^2 + q + 1",
      "1/(1 - q)",
      "qfact(6)/(qfact(3)^2)",
      "[D, theta]",
      "[D, be(theta,2)] - theta",
      "be(theta, 2)*eps - 3/4*D^2",
      "qexp(2, 5)",
      "-q*theta",
      "-(q + 1)^2",
      "z*zeps*dz - dtheta",
      "(theta + eps)^2*D",
      "q*(theta - eps)*(theta + eps)",
      "qnum(3)*qfact(2) + 7",
  };
  for (const char* s : corpus) {
    ExprPtr first = parse(s);
    std::string printed = print(*first);
    ExprPtr second = parse(printed);
    CHECK_MESSAGE(expr_equal(*first, *second), "round trip failed: ", s,
                  " -> ", printed);
    CHECK(print(*second) == printed);
  }
}

TEST_CASE("generic mode forbids the bosonic generators") {
  for (const char* s : {"z", "zeps", "dz", "dtheta"})
    CHECK_THROWS_AS(eval_generic(*parse(s)), EvalError);
}

TEST_CASE("root mode evaluation") {
  const int n = 3;
  FsElem v = eval_root(*parse("dtheta*theta"), n);
  CHECK(v == fs_normal_order(n, {FsGen::Dtheta, FsGen::Theta}));
  CHECK(eval_root(*parse("theta^3"), n).is_zero());
  CHECK(eval_root(*parse("q^3"), n) == FsElem::one(n));
  // D is not a token at the root; the message points at fs_D
  CHECK_THROWS_AS(eval_root(*parse("D"), n), EvalError);
  // [n]_q! = 0 blocks the divided power there
  CHECK_THROWS_AS(eval_root(*parse("be(theta, 3)"), n), EvalError);
  CHECK_THROWS_AS(eval_root(*parse("qexp(1, 5)"), n), EvalError);
  CHECK(eval_root(*parse("qexp(1, 2)"), n) ==
        FsElem::one(n) + fs_theta_divided_power(n, 1) +
            fs_theta_divided_power(n, 2));
}

TEST_CASE("scalar evaluation and the raw quotient") {
  RatQ x = eval_scalar(*parse("qnum(3)"));
  CHECK(x == qnum(3));
  CHECK_THROWS_AS(eval_scalar(*parse("theta")), EvalError);
  ScalarQuotient quot = eval_scalar_quotient(*parse("qfact(6)/(qfact(3)^2)"));
  CHECK(quot.num == qfact_poly(6));
  CHECK(quot.den == qfact_poly(3).pow(2));
  ScalarQuotient plain = eval_scalar_quotient(*parse("qnum(2) + 1"));
  CHECK(RatQ(plain.num, plain.den) == qnum(2) + RatQ(1));
}

TEST_CASE("division semantics") {
  CHECK(eval_generic(*parse("theta/2")) ==
        RatQ(Rational(1, 2)) * GradedElem::generator(Gen::Theta));
  CHECK_THROWS_AS(eval_generic(*parse("1/theta")), EvalError);
  CHECK_THROWS_AS(eval_generic(*parse("q/0")), EvalError);
  CHECK_THROWS_AS(eval_root(*parse("1/qnum(3)"), 3), EvalError);
}
