#ifndef QCALC_EVAL_HPP
#define QCALC_EVAL_HPP

#include <stdexcept>
#include <string>

#include "qcalc/fsusy.hpp"
#include "qcalc/graded.hpp"
#include "qcalc/parser.hpp"

namespace qcalc {

struct EvalError : std::runtime_error {
  EvalError(std::size_t pos_, const std::string& msg)
      : std::runtime_error("evaluation error at offset " +
                           std::to_string(pos_) + ": " + msg),
        pos(pos_) {}
  std::size_t pos;
};

/// Evaluates in the generic-q algebra. z, zeps, dtheta and dz tokens are
/// rejected; division is by scalars only.
GradedElem eval_generic(const Expr& e);

/// Evaluates in the root-of-unity algebra at q = zeta_n.
FsElem eval_root(const Expr& e, int n);

/// Evaluates a scalar-only expression to a RatQ; generators are rejected.
RatQ eval_scalar(const Expr& e);

/// Numerator/denominator pair for the limit command. A top-level division
/// keeps both sides as polynomials without cancelling, so the limit engine
/// can report how many Phi_n factors it removes.
struct ScalarQuotient {
  Poly num, den;
};

ScalarQuotient eval_scalar_quotient(const Expr& e);

}  // namespace qcalc

#endif
