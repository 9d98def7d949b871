#include "qcalc/parser.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace qcalc {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string compose_message(std::size_t offset,
                            const std::vector<std::string>& expected,
                            const std::string& found) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": expected "
     << join_expected(expected) << ", found " << found;
  return os.str();
}

enum class Tok { End, Int, Ident, Plus, Minus, Star, Slash, Caret,
                 LParen, RParen, LBracket, RBracket, Comma };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;  // 1-based
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    Token t;
    t.pos = i_ + 1;
    if (i_ >= s_.size()) return t;
    char c = s_[i_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      ++i_;
      return t;
    };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      case '^': return single(Tok::Caret);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      default: break;
    }
    // U+2212 (minus sign) in UTF-8
    if (static_cast<unsigned char>(c) == 0xE2 && i_ + 2 < s_.size() &&
        static_cast<unsigned char>(s_[i_ + 1]) == 0x88 &&
        static_cast<unsigned char>(s_[i_ + 2]) == 0x92) {
      t.kind = Tok::Minus;
      t.text = "-";
      i_ += 3;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        ++i_;
      t.kind = Tok::Int;
      t.text = std::string(s_.substr(start, i_ - start));
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      t.kind = Tok::Ident;
      t.text = std::string(s_.substr(start, i_ - start));
      return t;
    }
    throw ParseError(t.pos, {"a token"},
                     "unrecognized character '" + std::string(1, c) + "'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

constexpr std::array<const char*, 7> kGenerators = {
    "theta", "eps", "D", "z", "zeps", "dtheta", "dz"};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  ExprPtr run() {
    ExprPtr e = expr();
    if (cur_.kind != Tok::End)
      fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = cur_.kind == Tok::End
                            ? "end of input"
                            : "'" + cur_.text + "'";
    throw ParseError(cur_.pos, std::move(expected), std::move(found));
  }

  Token expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) fail({what});
    Token t = cur_;
    advance();
    return t;
  }

  long int_literal(const std::string& what) {
    Token t = expect(Tok::Int, what);
    return std::stol(t.text);
  }

  std::shared_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = pos;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool plus = cur_.kind == Tok::Plus;
      std::size_t pos = cur_.pos;
      advance();
      ExprPtr rhs = term();
      auto e = node(plus ? Expr::Kind::Add : Expr::Kind::Sub, pos);
      e->lhs = lhs;
      e->rhs = rhs;
      lhs = e;
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool mul = cur_.kind == Tok::Star;
      std::size_t pos = cur_.pos;
      advance();
      ExprPtr rhs = unary();
      auto e = node(mul ? Expr::Kind::Mul : Expr::Kind::Div, pos);
      e->lhs = lhs;
      e->rhs = rhs;
      lhs = e;
    }
    return lhs;
  }

  ExprPtr unary() {
    if (cur_.kind == Tok::Minus) {
      std::size_t pos = cur_.pos;
      advance();
      auto e = node(Expr::Kind::Neg, pos);
      e->lhs = unary();
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (cur_.kind == Tok::Caret) {
      std::size_t pos = cur_.pos;
      advance();
      auto e = node(Expr::Kind::Pow, pos);
      e->lhs = base;
      e->ival = int_literal("a nonnegative integer exponent");
      return e;
    }
    return base;
  }

  ExprPtr atom() {
    switch (cur_.kind) {
      case Tok::Int: {
        auto e = node(Expr::Kind::Number, cur_.pos);
        e->number = Rational(cur_.text);
        advance();
        return e;
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        std::size_t pos = cur_.pos;
        advance();
        auto e = node(Expr::Kind::Bracket, pos);
        e->lhs = expr();
        expect(Tok::Comma, "','");
        e->rhs = expr();
        expect(Tok::RBracket, "']'");
        return e;
      }
      case Tok::Ident:
        return ident();
      default:
        fail({"a number", "'('", "'['", "a symbol", "a function call"});
    }
  }

  ExprPtr ident() {
    Token t = cur_;
    advance();
    if (t.text == "q") return node(Expr::Kind::SymQ, t.pos);
    for (const char* g : kGenerators) {
      if (t.text == g) {
        auto e = node(Expr::Kind::Generator, t.pos);
        e->gen = t.text;
        return e;
      }
    }
    if (t.text == "qnum" || t.text == "qfact") {
      auto e = node(t.text == "qnum" ? Expr::Kind::Qnum : Expr::Kind::Qfact,
                    t.pos);
      expect(Tok::LParen, "'('");
      e->ival = int_literal("a nonnegative integer");
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.text == "be" || t.text == "qexp") {
      auto e = node(t.text == "be" ? Expr::Kind::Be : Expr::Kind::Qexp, t.pos);
      expect(Tok::LParen, "'('");
      e->lhs = expr();
      expect(Tok::Comma, "','");
      e->ival = int_literal("a nonnegative integer");
      expect(Tok::RParen, "')'");
      return e;
    }
    throw ParseError(t.pos,
                     {"q", "theta", "eps", "D", "z", "zeps", "dtheta", "dz",
                      "qnum", "qfact", "be", "qexp"},
                     "'" + t.text + "'");
  }

  Lexer lex_;
  Token cur_;
};

int prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_rec(const Expr& e, std::ostringstream& os, int parent, bool rhs_side) {
  int p = prec(e);
  bool parens = p < parent || (p == parent && rhs_side && p <= 2);
  if (parens) os << "(";
  switch (e.kind) {
    case Expr::Kind::Number:
      os << e.number.get_str();
      break;
    case Expr::Kind::SymQ:
      os << "q";
      break;
    case Expr::Kind::Generator:
      os << e.gen;
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print_rec(*e.lhs, os, 1, false);
      os << (e.kind == Expr::Kind::Add ? " + " : " - ");
      print_rec(*e.rhs, os, 1, true);
      break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print_rec(*e.lhs, os, 2, false);
      os << (e.kind == Expr::Kind::Mul ? "*" : "/");
      print_rec(*e.rhs, os, 2, true);
      break;
    case Expr::Kind::Neg:
      os << "-";
      print_rec(*e.lhs, os, 3, true);
      break;
    case Expr::Kind::Pow:
      print_rec(*e.lhs, os, 5, false);
      os << "^" << e.ival;
      break;
    case Expr::Kind::Bracket:
      os << "[";
      print_rec(*e.lhs, os, 0, false);
      os << ", ";
      print_rec(*e.rhs, os, 0, false);
      os << "]";
      break;
    case Expr::Kind::Qnum:
      os << "qnum(" << e.ival << ")";
      break;
    case Expr::Kind::Qfact:
      os << "qfact(" << e.ival << ")";
      break;
    case Expr::Kind::Be:
    case Expr::Kind::Qexp:
      os << (e.kind == Expr::Kind::Be ? "be(" : "qexp(");
      print_rec(*e.lhs, os, 0, false);
      os << ", " << e.ival << ")";
      break;
  }
  if (parens) os << ")";
}

}  // namespace

ParseError::ParseError(std::size_t offset_, std::vector<std::string> expected_,
                       std::string found_)
    : std::runtime_error(compose_message(offset_, expected_, found_)),
      offset(offset_),
      expected(std::move(expected_)),
      found(std::move(found_)) {}

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) {
  std::ostringstream os;
  print_rec(e, os, 0, false);
  return os.str();
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.ival != b.ival || a.gen != b.gen) return false;
  if (a.kind == Expr::Kind::Number && !(a.number == b.number)) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !expr_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !expr_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

}  // namespace qcalc
