#include "qcalc/eval.hpp"

namespace qcalc {

namespace {

Gen generic_gen(const Expr& e) {
  if (e.gen == "theta") return Gen::Theta;
  if (e.gen == "eps") return Gen::Eps;
  if (e.gen == "D") return Gen::D;
  throw EvalError(e.pos, "'" + e.gen + "' is not available at generic q");
}

FsGen root_gen(const Expr& e) {
  if (e.gen == "theta") return FsGen::Theta;
  if (e.gen == "eps") return FsGen::Eps;
  if (e.gen == "z") return FsGen::Z;
  if (e.gen == "zeps") return FsGen::Zeps;
  if (e.gen == "dtheta") return FsGen::Dtheta;
  if (e.gen == "dz") return FsGen::Dz;
  if (e.gen == "D")
    throw EvalError(e.pos,
                    "D is a defined element at a root of unity; write "
                    "dtheta + be(theta, n-1)*dz or use the library fs_D");
  throw EvalError(e.pos, "unknown generator '" + e.gen + "'");
}

}  // namespace

GradedElem eval_generic(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return GradedElem::scalar(RatQ(e.number));
    case Expr::Kind::SymQ:
      return GradedElem::scalar(RatQ::q());
    case Expr::Kind::Generator:
      return GradedElem::generator(generic_gen(e));
    case Expr::Kind::Add:
      return eval_generic(*e.lhs) + eval_generic(*e.rhs);
    case Expr::Kind::Sub:
      return eval_generic(*e.lhs) - eval_generic(*e.rhs);
    case Expr::Kind::Mul:
      return eval_generic(*e.lhs) * eval_generic(*e.rhs);
    case Expr::Kind::Div: {
      GradedElem den = eval_generic(*e.rhs);
      if (!den.is_scalar())
        throw EvalError(e.pos, "division requires a scalar divisor");
      RatQ s = den.scalar_part();
      if (s.is_zero()) throw EvalError(e.pos, "division by zero");
      return s.inverse() * eval_generic(*e.lhs);
    }
    case Expr::Kind::Pow: {
      GradedElem base = eval_generic(*e.lhs);
      if (base.is_scalar())
        return GradedElem::scalar(base.scalar_part().pow(e.ival));
      return base.pow(static_cast<unsigned>(e.ival));
    }
    case Expr::Kind::Neg:
      return -eval_generic(*e.lhs);
    case Expr::Kind::Bracket:
      return graded_bracket(eval_generic(*e.lhs), eval_generic(*e.rhs));
    case Expr::Kind::Qnum:
      return GradedElem::scalar(qnum(static_cast<int>(e.ival)));
    case Expr::Kind::Qfact:
      return GradedElem::scalar(qfact(static_cast<int>(e.ival)));
    case Expr::Kind::Be: {
      GradedElem base = eval_generic(*e.lhs);
      RatQ f = qfact(static_cast<int>(e.ival));
      if (base.is_scalar())
        return GradedElem::scalar(base.scalar_part().pow(e.ival) / f);
      return f.inverse() * base.pow(static_cast<unsigned>(e.ival));
    }
    case Expr::Kind::Qexp: {
      GradedElem c = eval_generic(*e.lhs);
      if (!c.is_scalar())
        throw EvalError(e.pos, "qexp requires a scalar argument");
      return qexp(c.scalar_part(), static_cast<int>(e.ival));
    }
  }
  throw EvalError(e.pos, "unhandled expression");
}

FsElem eval_root(const Expr& e, int n) {
  auto scalar = [n](const CycloNum& c) { return FsElem::scalar(n, c); };
  switch (e.kind) {
    case Expr::Kind::Number:
      return scalar(CycloNum(n, e.number));
    case Expr::Kind::SymQ:
      return scalar(CycloNum::zeta(n));
    case Expr::Kind::Generator:
      return FsElem::generator(n, root_gen(e));
    case Expr::Kind::Add:
      return eval_root(*e.lhs, n) + eval_root(*e.rhs, n);
    case Expr::Kind::Sub:
      return eval_root(*e.lhs, n) - eval_root(*e.rhs, n);
    case Expr::Kind::Mul:
      return eval_root(*e.lhs, n) * eval_root(*e.rhs, n);
    case Expr::Kind::Div: {
      FsElem den = eval_root(*e.rhs, n);
      if (!den.is_scalar())
        throw EvalError(e.pos, "division requires a scalar divisor");
      CycloNum s = den.scalar_part();
      if (s.is_zero())
        throw EvalError(e.pos, "division by a scalar that vanishes at zeta_n");
      return s.inverse() * eval_root(*e.lhs, n);
    }
    case Expr::Kind::Pow: {
      FsElem base = eval_root(*e.lhs, n);
      if (base.is_scalar()) return scalar(base.scalar_part().pow(e.ival));
      return base.pow(static_cast<unsigned>(e.ival));
    }
    case Expr::Kind::Neg:
      return -eval_root(*e.lhs, n);
    case Expr::Kind::Bracket:
      return fs_graded_bracket(eval_root(*e.lhs, n), eval_root(*e.rhs, n));
    case Expr::Kind::Qnum:
      return scalar(qnum_at_root(static_cast<int>(e.ival), n));
    case Expr::Kind::Qfact:
      return scalar(qfact_at_root(static_cast<int>(e.ival), n));
    case Expr::Kind::Be: {
      CycloNum f = qfact_at_root(static_cast<int>(e.ival), n);
      if (f.is_zero())
        throw EvalError(e.pos, "[" + std::to_string(e.ival) +
                                   "]_q! vanishes at zeta_n; the divided "
                                   "power lives in the limit algebra");
      FsElem base = eval_root(*e.lhs, n);
      if (base.is_scalar())
        return scalar(base.scalar_part().pow(e.ival) * f.inverse());
      return f.inverse() * base.pow(static_cast<unsigned>(e.ival));
    }
    case Expr::Kind::Qexp: {
      if (e.ival >= n)
        throw EvalError(e.pos,
                        "qexp order must stay below n at a root of unity");
      FsElem c = eval_root(*e.lhs, n);
      if (!c.is_scalar())
        throw EvalError(e.pos, "qexp requires a scalar argument");
      FsElem out(n);
      for (int m = 0; m <= e.ival; ++m)
        out += c.scalar_part().pow(m) * fs_theta_divided_power(n, m);
      return out;
    }
  }
  throw EvalError(e.pos, "unhandled expression");
}

RatQ eval_scalar(const Expr& e) {
  GradedElem v = eval_generic(e);
  if (!v.is_scalar())
    throw EvalError(e.pos, "expected a scalar expression (no generators)");
  return v.scalar_part();
}

ScalarQuotient eval_scalar_quotient(const Expr& e) {
  if (e.kind == Expr::Kind::Div) {
    RatQ a = eval_scalar(*e.lhs);
    RatQ b = eval_scalar(*e.rhs);
    if (b.is_zero()) throw EvalError(e.pos, "division by zero");
    return ScalarQuotient{a.num() * b.den(), a.den() * b.num()};
  }
  RatQ x = eval_scalar(e);
  return ScalarQuotient{x.num(), x.den()};
}

}  // namespace qcalc
