#include "socle/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "socle/upoly.hpp"

namespace socle {

namespace {

// ---------------------------------------------------------------------------
// lexer

enum class Tok {
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  Colon,
  Semicolon,
  Pipe,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(&s) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }
  Token expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError("expected " + what + ", found '" + describe(cur_) + "'",
                       cur_.line, cur_.col);
    return take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.col);
  }

 private:
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

  void advance() {
    const std::string& s = *s_;
    while (i_ < s.size() && std::isspace(static_cast<unsigned char>(s[i_]))) {
      if (s[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++i_;
    }
    cur_ = Token{Tok::End, "", line_, col_};
    if (i_ >= s.size()) return;
    char c = s[i_];
    auto single = [&](Tok k) {
      cur_.kind = k;
      cur_.text = std::string(1, c);
      ++i_;
      ++col_;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      cur_.kind = Tok::Number;
      cur_.text = s.substr(i_, j - i_);
      col_ += static_cast<int>(j - i_);
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      cur_.kind = Tok::Ident;
      cur_.text = s.substr(i_, j - i_);
      col_ += static_cast<int>(j - i_);
      i_ = j;
      return;
    }
    switch (c) {
      case '+': single(Tok::Plus); return;
      case '-': single(Tok::Minus); return;
      case '*': single(Tok::Star); return;
      case '/': single(Tok::Slash); return;
      case '^': single(Tok::Caret); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case ',': single(Tok::Comma); return;
      case ':': single(Tok::Colon); return;
      case ';': single(Tok::Semicolon); return;
      case '|': single(Tok::Pipe); return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col_);
    }
  }

  const std::string* s_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

long to_long(const Token& t) {
  try {
    return std::stol(t.text);
  } catch (const std::exception&) {
    throw ParseError("number out of range: " + t.text, t.line, t.col);
  }
}

// ---------------------------------------------------------------------------
// element expressions (shared by minimal-polynomial bodies and user elements)

class ExprParser {
 public:
  ExprParser(Lexer& lx, FunFieldPtr field) : lx_(lx), field_(std::move(field)) {}

  RatFunc expr() {
    RatFunc v = term();
    while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
      Tok op = lx_.take().kind;
      RatFunc r = term();
      v = (op == Tok::Plus) ? v + r : v - r;
    }
    return v;
  }

 private:
  RatFunc term() {
    RatFunc v = unary();
    while (lx_.peek().kind == Tok::Star || lx_.peek().kind == Tok::Slash) {
      Token op = lx_.take();
      RatFunc r = unary();
      if (op.kind == Tok::Star) {
        v = v * r;
      } else {
        if (r.is_zero())
          throw ParseError("division by zero", op.line, op.col);
        v = v / r;
      }
    }
    return v;
  }

  RatFunc unary() {
    if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      return -unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (lx_.peek().kind != Tok::Caret) return base;
    Token caret = lx_.take();
    long sign = 1;
    if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      sign = -1;
    }
    Token e = lx_.expect(Tok::Number, "an integer exponent");
    long exp = sign * to_long(e);
    if (exp < 0 && base.is_zero())
      throw ParseError("zero raised to a negative power", caret.line,
                       caret.col);
    return base.pow(exp);
  }

  RatFunc atom() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        lx_.take();
        RatFunc v = expr();
        lx_.expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::Number: {
        Token n = lx_.take();
        return RatFunc::constant(
            field_, field_->base()->from_rational(Rat(Int(n.text))));
      }
      case Tok::Ident: {
        Token id = lx_.take();
        int var = field_->var_index(id.text);
        if (var >= 0) return RatFunc::variable(field_, var);
        if (auto g = field_->base()->named_generator(id.text))
          return RatFunc::constant(field_, *g);
        throw ParseError("unknown symbol '" + id.text + "'", id.line, id.col);
      }
      default:
        lx_.fail("expected an expression");
    }
  }

  Lexer& lx_;
  FunFieldPtr field_;
};

// ---------------------------------------------------------------------------
// base fields

bool is_all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// "zeta5" -> 5
std::optional<long> zeta_index(const std::string& s) {
  if (s.rfind("zeta", 0) != 0) return std::nullopt;
  std::string rest = s.substr(4);
  if (!is_all_digits(rest)) return std::nullopt;
  return std::stol(rest);
}

UPoly parse_minpoly(Lexer& lx, const FieldPtr& base, const Token& at) {
  // the body of Q(r5:x^5-2): a monic polynomial in x over the current base,
  // parsed through a throwaway single-variable function field
  auto scratch = FunctionFieldDescriptor::make(base, {"x"}, {});
  ExprParser ep(lx, scratch);
  RatFunc body = ep.expr();
  if (!body.is_polynomial())
    throw ParseError("minimal polynomial must be polynomial in x", at.line,
                     at.col);
  MultiPoly num = body.num();
  FieldElement dc = body.den().constant_value();
  UPoly f = num.to_upoly(0) * dc.inv();
  if (f.degree() < 2)
    throw ParseError("minimal polynomial must have degree at least 2",
                     at.line, at.col);
  if (!f.lead().is_one())
    throw ParseError("minimal polynomial must be monic", at.line, at.col);
  return f;
}

FieldPtr parse_base(Lexer& lx) {
  Token head = lx.expect(Tok::Ident, "a field name");
  FieldPtr base;
  if (head.text == "Q") {
    base = FieldDescriptor::rationals();
  } else if (head.text == "Fp") {
    lx.expect(Tok::LParen, "'('");
    Token p = lx.expect(Tok::Number, "a prime");
    lx.expect(Tok::RParen, "')'");
    base = make_prime_field(Int(p.text));
  } else if (head.text == "Fq") {
    lx.expect(Tok::LParen, "'('");
    Token p = lx.expect(Tok::Number, "a prime");
    lx.expect(Tok::Comma, "','");
    Token k = lx.expect(Tok::Number, "an exponent");
    std::string symbol = "g";
    if (lx.peek().kind == Tok::Semicolon) {
      lx.take();
      symbol = lx.expect(Tok::Ident, "a generator symbol").text;
    }
    lx.expect(Tok::RParen, "')'");
    long kk = to_long(k);
    if (kk < 1) throw ParseError("exponent must be >= 1", k.line, k.col);
    base = kk == 1 ? make_prime_field(Int(p.text))
                   : make_finite_field(Int(p.text), static_cast<int>(kk),
                                       symbol);
  } else if (head.text.size() > 1 && head.text[0] == 'F' &&
             is_all_digits(head.text.substr(1))) {
    base = make_prime_field(Int(head.text.substr(1)));
  } else {
    throw ParseError("unknown base field '" + head.text + "'", head.line,
                     head.col);
  }

  // chained extensions: (zetaN) or (sym:poly). A '(' not matching either
  // shape belongs to the caller (the variable list).
  while (lx.peek().kind == Tok::LParen) {
    // the first token inside decides; peek by copying the lexer is not
    // possible, so decide from the token after '(' and backtrack-free shapes:
    // Ident followed by ':' => extension; Ident "zetaN" followed by ')' =>
    // cyclotomic; anything else => not ours.  We must not consume the '(' in
    // the last case, so re-lex from a saved copy.
    Lexer saved = lx;  // cheap: string ref + indices
    lx.take();         // '('
    if (lx.peek().kind != Tok::Ident) {
      lx = saved;
      break;
    }
    Token id = lx.take();
    if (lx.peek().kind == Tok::RParen && zeta_index(id.text)) {
      lx.take();
      long n = *zeta_index(id.text);
      if (base->total_degree() != 1 || base->is_finite())
        throw ParseError("cyclotomic extensions are built over Q", id.line,
                         id.col);
      base = make_cyclotomic(n);
      continue;
    }
    if (lx.peek().kind == Tok::Colon) {
      Token colon = lx.take();
      UPoly f = parse_minpoly(lx, base, colon);
      lx.expect(Tok::RParen, "')'");
      base = extend_field(base, f, id.text);
      continue;
    }
    lx = saved;
    break;
  }
  return base;
}

}  // namespace

FieldPtr parse_base_field(const std::string& text) {
  Lexer lx(text);
  FieldPtr f = parse_base(lx);
  if (lx.peek().kind != Tok::End)
    lx.fail("trailing input after the field descriptor");
  return f;
}

FunFieldPtr parse_function_field(const std::string& text) {
  Lexer lx(text);
  FieldPtr base = parse_base(lx);
  lx.expect(Tok::LParen, "'(' introducing the variable list");
  std::vector<std::string> vars;
  vars.push_back(lx.expect(Tok::Ident, "a variable name").text);
  while (lx.peek().kind == Tok::Comma) {
    lx.take();
    vars.push_back(lx.expect(Tok::Ident, "a variable name").text);
  }
  std::map<std::string, char> tags;
  if (lx.peek().kind == Tok::Pipe) {
    lx.take();
    while (lx.peek().kind == Tok::Ident) {
      Token v = lx.take();
      lx.expect(Tok::Colon, "':' in a partition tag");
      Token kind = lx.expect(Tok::Ident, "'T' or 'U'");
      if (kind.text != "T" && kind.text != "U")
        throw ParseError("partition tag must be T or U", kind.line, kind.col);
      if (std::find(vars.begin(), vars.end(), v.text) == vars.end())
        throw ParseError("tag names unknown variable '" + v.text + "'",
                         v.line, v.col);
      tags[v.text] = kind.text[0];
    }
  }
  lx.expect(Tok::RParen, "')'");
  if (lx.peek().kind != Tok::End)
    lx.fail("trailing input after the field descriptor");

  std::vector<std::string> t_vars, u_vars;
  for (const auto& v : vars) {
    char tag;
    auto it = tags.find(v);
    if (it != tags.end()) {
      tag = it->second;
    } else {
      // default partition: u*/v* names are U-variables
      tag = (v[0] == 'u' || v[0] == 'v') ? 'U' : 'T';
    }
    (tag == 'T' ? t_vars : u_vars).push_back(v);
  }
  return FunctionFieldDescriptor::make(base, t_vars, u_vars);
}

RatFunc parse_element(const FunFieldPtr& field, const std::string& text) {
  Lexer lx(text);
  ExprParser ep(lx, field);
  RatFunc v = ep.expr();
  if (lx.peek().kind != Tok::End) lx.fail("trailing input after expression");
  return v;
}

std::vector<RatFunc> parse_element_list(const FunFieldPtr& field,
                                        const std::string& text) {
  Lexer lx(text);
  ExprParser ep(lx, field);
  std::vector<RatFunc> out;
  out.push_back(ep.expr());
  while (lx.peek().kind == Tok::Comma) {
    lx.take();
    out.push_back(ep.expr());
  }
  if (lx.peek().kind != Tok::End) lx.fail("trailing input after expression");
  return out;
}

FieldElement parse_field_element(const FieldPtr& field,
                                 const std::string& text) {
  auto scratch = FunctionFieldDescriptor::make(field, {"__t"}, {});
  RatFunc v = parse_element(scratch, text);
  if (!v.is_constant())
    throw ParseError("expression is not an element of the field tower", 1, 1);
  return v.constant_value();
}

void require_kummer_request(const FunFieldPtr& field, const Int& p) {
  if (p <= 1) throw SemanticError("the exponent p must be a prime");
  if (field->base()->characteristic() == p)
    throw SemanticError(
        "Kummer classes need p invertible: p equals the characteristic; "
        "use the Artin-Schreier operations instead");
}

void require_artin_schreier_request(const FunFieldPtr& field, const Int& p) {
  if (field->base()->characteristic() == 0)
    throw SemanticError(
        "Artin-Schreier classes only exist in characteristic p > 0");
  if (field->base()->characteristic() != p)
    throw SemanticError(
        "Artin-Schreier classes need p equal to the characteristic");
}

}  // namespace socle
