#include "qdulac/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qdulac/error.hpp"

namespace qdulac {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, equals, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const int l = line;
    const int c = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
    case '+': kind = Tok::plus; break;
    case '-': kind = Tok::minus; break;
    case '*': kind = Tok::star; break;
    case '/': kind = Tok::slash; break;
    case '^': kind = Tok::caret; break;
    case '(': kind = Tok::lparen; break;
    case ')': kind = Tok::rparen; break;
    case '=': kind = Tok::equals; break;
    default:
      throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
    out.push_back({kind, std::string(1, ch), l, c});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
public:
  Parser(std::string_view src, const std::vector<std::string>& params, std::string var, bool allow_unknowns)
      : tokens_(tokenize(src)), params_(params.begin(), params.end()), var_(std::move(var)),
        allow_unknowns_(allow_unknowns) {
    for (const auto& p : params_) check_symbol_name(p);
  }

  QPolynomial equation() {
    QPolynomial lhs = expr();
    if (peek().kind == Tok::equals) {
      next();
      const Token& rhs = expect(Tok::integer, "expected 0 after '='");
      if (rhs.text.find_first_not_of('0') != std::string::npos) {
        throw ParseError("right-hand side must be 0", rhs.line, rhs.column);
      }
    }
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return lhs;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.kind == Tok::end ? msg + " (at end of input)" : msg, t.line, t.column);
  }

  const Token& expect(Tok kind, const std::string& msg) {
    if (peek().kind != kind) fail(msg);
    return next();
  }

  QPolynomial expr() {
    QPolynomial acc(var_);
    bool negate = false;
    if (peek().kind == Tok::minus) {
      next();
      negate = true;
    }
    acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      QPolynomial t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  QPolynomial term() {
    QPolynomial acc = factor();
    while (peek().kind == Tok::star) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  unsigned integer_power() {
    if (peek().kind == Tok::minus) fail("negative powers are not allowed");
    if (peek().kind == Tok::lparen) fail("non-integer power (only x may carry a rational power)");
    const Token& t = expect(Tok::integer, "expected an integer power after '^'");
    if (t.text.size() > 6) throw ParseError("power too large", t.line, t.column);
    return static_cast<unsigned>(std::stoul(t.text));
  }

  QPolynomial factor() {
    const bool is_x = peek().kind == Tok::ident && peek().text == "x";
    QPolynomial base = atom();
    if (peek().kind != Tok::caret) return base;
    next();
    if (is_x && peek().kind == Tok::lparen) {
      next();
      const Rat e = rational_literal();
      expect(Tok::rparen, "expected ')' after rational power");
      if (e.sign() < 0) fail("negative powers are not allowed");
      return QPolynomial::x_power(e, var_);
    }
    return base.pow(integer_power());
  }

  Rat rational_literal() {
    bool neg = false;
    if (peek().kind == Tok::minus) {
      next();
      neg = true;
    }
    const Token& n = expect(Tok::integer, "expected an integer");
    mpz_class num(n.text);
    mpz_class den = 1;
    if (peek().kind == Tok::slash) {
      next();
      const Token& d = expect(Tok::integer, "expected an integer denominator after '/'");
      den = mpz_class(d.text);
      if (den == 0) throw ParseError("zero denominator", d.line, d.column);
    }
    Rat r(num, den);
    return neg ? -r : r;
  }

  void check_unknown_allowed(const Token& t) const {
    if (!allow_unknowns_) {
      throw ParseError("'" + t.text + "' is not allowed in a parameter expression", t.line, t.column);
    }
  }

  QPolynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::integer: {
      const Rat v = rational_literal();
      return QPolynomial::constant(ParamPoly(v), var_);
    }
    case Tok::lparen: {
      next();
      QPolynomial inner = expr();
      expect(Tok::rparen, "expected ')'");
      return inner;
    }
    case Tok::ident: {
      next();
      if (t.text == "x") {
        check_unknown_allowed(t);
        return QPolynomial::x_power(Rat(1), var_);
      }
      if (t.text == var_) {
        check_unknown_allowed(t);
        return QPolynomial::shift(0, var_);
      }
      if (t.text == "S") {
        check_unknown_allowed(t);
        unsigned level = 1;
        if (peek().kind == Tok::caret) {
          next();
          level = integer_power();
        }
        expect(Tok::lparen, "expected '(' after S");
        const Token& arg = expect(Tok::ident, "expected '" + var_ + "' inside S(...)");
        if (arg.text != var_) {
          throw ParseError("S(...) applies only to '" + var_ + "'", arg.line, arg.column);
        }
        expect(Tok::rparen, "expected ')' to close S(" + var_ + ")");
        return QPolynomial::shift(level, var_);
      }
      if (!params_.contains(t.text)) {
        throw ParseError("undeclared identifier '" + t.text + "'", t.line, t.column);
      }
      return QPolynomial::constant(ParamPoly::symbol(t.text), var_);
    }
    case Tok::end:
      fail("unexpected end of input");
    default:
      fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string, std::less<>> params_;
  std::string var_;
  bool allow_unknowns_;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

QPolynomial parse_equation(std::string_view text, const std::vector<std::string>& params, const std::string& var) {
  return Parser(text, params, var, true).equation();
}

ParamPoly parse_param_expr(std::string_view text, const std::vector<std::string>& params) {
  const QPolynomial p = Parser(text, params, "y", false).equation();
  if (p.is_zero()) return {};
  return p.terms().front().coeff;
}

std::vector<std::string> parse_symbol_list(std::string_view text) {
  std::vector<std::string> out;
  for (auto& name : split(text, ',')) {
    if (name.empty()) continue;
    check_symbol_name(name);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
  }
  return out;
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::invalid_argument, "expected name=value in assignment, got '" + item + "'");
    }
    const std::string name = item.substr(0, eq);
    check_symbol_name(name);
    out[name] = Rat::parse(item.substr(eq + 1));
  }
  return out;
}

} // namespace qdulac
