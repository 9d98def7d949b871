#ifndef QCALC_PARSER_HPP
#define QCALC_PARSER_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Expression AST for the surface syntax. Precedence ^ > * / > + -, with
/// explicit '*' (no juxtaposition); [A,B] is the graded bracket; exponents
/// and call arguments are nonnegative integer literals.
struct Expr {
  enum class Kind {
    Number,     // integer literal
    SymQ,       // the deformation parameter q
    Generator,  // theta, eps, D, z, zeps, dtheta, dz
    Add, Sub, Mul, Div,
    Pow,        // lhs ^ ival
    Neg,        // -lhs
    Bracket,    // [lhs, rhs]
    Qnum, Qfact,  // qnum(ival), qfact(ival)
    Be,         // be(lhs, ival): lhs^ival / [ival]_q!
    Qexp,       // qexp(lhs, ival): truncated q-exponential
  };

  Kind kind;
  std::size_t pos = 0;  // 1-based byte offset of the originating token
  Rational number;
  std::string gen;
  std::shared_ptr<const Expr> lhs, rhs;
  long ival = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset_, std::vector<std::string> expected_,
             std::string found_);
  std::size_t offset;  // 1-based byte offset
  std::vector<std::string> expected;
  std::string found;
};

/// Parses UTF-8 text (the unicode minus sign is accepted as '-').
ExprPtr parse(std::string_view text);

/// Canonical rendering that reparses to a structurally identical AST.
std::string print(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

}  // namespace qcalc

#endif
