#include "pcdt/surface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <vector>

namespace pcdt::surface {

std::string to_string(const SrcPos& p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

std::string to_string(const ParseError& e) { return to_string(e.pos) + ": " + e.message; }

namespace {

ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr var_expr(std::string name, SrcPos pos) {
  return make_expr({Expr::Kind::Var, pos, std::move(name), 0, nullptr, nullptr});
}
ExprPtr lam_expr(std::string name, ExprPtr body, SrcPos pos) {
  return make_expr({Expr::Kind::Lam, pos, std::move(name), 0, std::move(body), nullptr});
}
ExprPtr app_expr(ExprPtr fun, ExprPtr arg, SrcPos pos) {
  return make_expr({Expr::Kind::App, pos, {}, 0, std::move(fun), std::move(arg)});
}
ExprPtr lit_expr(Int value, SrcPos pos) { return make_expr({Expr::Kind::Lit, pos, {}, value, nullptr, nullptr}); }
ExprPtr plus_expr(ExprPtr lhs, ExprPtr rhs, SrcPos pos) {
  return make_expr({Expr::Kind::Plus, pos, {}, 0, std::move(lhs), std::move(rhs)});
}
ExprPtr err_expr(SrcPos pos) { return make_expr({Expr::Kind::Err, pos, {}, 0, nullptr, nullptr}); }
ExprPtr let_expr(std::string name, ExprPtr bound, ExprPtr body, SrcPos pos) {
  return make_expr({Expr::Kind::Let, pos, std::move(name), 0, std::move(bound), std::move(body)});
}

std::size_t expr_depth(const Expr& e) {
  std::size_t d = 0;
  if (e.a) d = std::max(d, expr_depth(*e.a));
  if (e.b) d = std::max(d, expr_depth(*e.b));
  return d + 1;
}

namespace {

enum class Tok { Backslash, Dot, Let, In, Equals, Plus, LParen, RParen, Ident, Integer, Error, End };

struct Lexeme {
  Tok kind;
  std::string text;
  SrcPos pos;
};

std::string escape_lexeme(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return std::string(1, c);
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02X", u);
  return buf;
}

Result<std::vector<Lexeme>, ParseError> lex(std::string_view in) {
  std::vector<Lexeme> out;
  SrcPos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (in[i + k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
    i += n;
  };
  while (i < in.size()) {
    const char c = in[i];
    const auto u = static_cast<unsigned char>(c);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    const SrcPos start = pos;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      advance(1);
    };
    switch (c) {
      case '\\': single(Tok::Backslash); continue;
      case '.': single(Tok::Dot); continue;
      case '=': single(Tok::Equals); continue;
      case '+': single(Tok::Plus); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      default: break;
    }
    if (u < 0x80 && std::islower(u)) {
      std::size_t j = i + 1;
      while (j < in.size() && static_cast<unsigned char>(in[j]) < 0x80 &&
             std::isalnum(static_cast<unsigned char>(in[j]))) {
        ++j;
      }
      std::string word(in.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "let") k = Tok::Let;
      else if (word == "in") k = Tok::In;
      else if (word == "error") k = Tok::Error;
      out.push_back({k, std::move(word), start});
      advance(j - i);
      continue;
    }
    if (u < 0x80 && std::isdigit(u)) {
      std::size_t j = i + 1;
      while (j < in.size() && static_cast<unsigned char>(in[j]) < 0x80 &&
             std::isdigit(static_cast<unsigned char>(in[j]))) {
        ++j;
      }
      out.push_back({Tok::Integer, std::string(in.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    return Failure<ParseError>{{start, "unexpected token '" + escape_lexeme(c) + "'"}};
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Lexeme> toks) : toks_(std::move(toks)) {}

  ExprPtr top() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) unexpected();
    return e;
  }

 private:
  struct Abort {
    ParseError error;
  };

  // Bounds recursion on adversarial nesting. The depth limit itself is
  // checked on the finished tree; redundant parentheses get some slack here.
  static constexpr std::size_t max_frames = 2 * max_depth;

  struct Nest {
    explicit Nest(Parser& p) : p_(p) {
      if (++p_.nesting_ > max_frames) throw Abort{{p_.peek().pos, "expression nested too deeply"}};
    }
    ~Nest() { --p_.nesting_; }
    Parser& p_;
  };

  const Lexeme& peek() const { return toks_[i_]; }

  Lexeme take() {
    Lexeme t = toks_[i_];
    if (t.kind != Tok::End) ++i_;
    return t;
  }

  [[noreturn]] void unexpected() const {
    const Lexeme& t = peek();
    if (t.kind == Tok::End) {
      // Reported at the last consumed token.
      const SrcPos p = i_ == 0 ? SrcPos{} : toks_[i_ - 1].pos;
      throw Abort{{p, "unexpected end of input"}};
    }
    throw Abort{{t.pos, "unexpected token '" + t.text + "'"}};
  }

  Lexeme expect(Tok k) {
    if (peek().kind != k) unexpected();
    return take();
  }

  ExprPtr expr() {
    Nest guard(*this);
    const Lexeme& t = peek();
    if (t.kind == Tok::Backslash) {
      const SrcPos p = take().pos;
      Lexeme x = expect(Tok::Ident);
      expect(Tok::Dot);
      return lam_expr(x.text, expr(), p);
    }
    if (t.kind == Tok::Let) {
      const SrcPos p = take().pos;
      Lexeme x = expect(Tok::Ident);
      expect(Tok::Equals);
      ExprPtr bound = expr();
      expect(Tok::In);
      return let_expr(x.text, std::move(bound), expr(), p);
    }
    return sum();
  }

  ExprPtr sum() {
    ExprPtr lhs = app();
    std::size_t chain = 0;
    while (peek().kind == Tok::Plus) {
      take();
      if (++chain + nesting_ > max_frames) throw Abort{{peek().pos, "expression nested too deeply"}};
      lhs = plus_expr(lhs, app(), lhs->pos);
    }
    return lhs;
  }

  static bool starts_atom(Tok k) {
    return k == Tok::Ident || k == Tok::Integer || k == Tok::Error || k == Tok::LParen;
  }

  ExprPtr app() {
    ExprPtr f = atom();
    std::size_t chain = 0;
    while (starts_atom(peek().kind)) {
      if (++chain + nesting_ > max_frames) throw Abort{{peek().pos, "expression nested too deeply"}};
      f = app_expr(f, atom(), f->pos);
    }
    return f;
  }

  ExprPtr atom() {
    const Lexeme t = peek();
    switch (t.kind) {
      case Tok::Ident:
        take();
        return var_expr(t.text, t.pos);
      case Tok::Integer: {
        take();
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
          throw Abort{{t.pos, "integer literal out of range '" + t.text + "'"}};
        }
        return lit_expr(v, t.pos);
      }
      case Tok::Error:
        take();
        return err_expr(t.pos);
      case Tok::LParen: {
        take();
        ExprPtr e = expr();
        expect(Tok::RParen);
        // A parenthesized operand starts at its opening parenthesis.
        Expr copy = *e;
        copy.pos = t.pos;
        return make_expr(std::move(copy));
      }
      default:
        unexpected();
    }
  }

  std::vector<Lexeme> toks_;
  std::size_t i_ = 0;
  std::size_t nesting_ = 0;

 public:
  static Result<ExprPtr, ParseError> run(std::vector<Lexeme> toks) {
    Parser p(std::move(toks));
    try {
      return p.top();
    } catch (const Abort& a) {
      return Failure<ParseError>{a.error};
    }
  }
};

void first_unbound(const Expr& e, std::vector<std::string>& scope, std::optional<ParseError>& out) {
  if (out) return;
  switch (e.kind) {
    case Expr::Kind::Var:
      if (std::find(scope.rbegin(), scope.rend(), e.name) == scope.rend()) {
        out = ParseError{e.pos, "unbound identifier '" + e.name + "'"};
      }
      return;
    case Expr::Kind::Lam:
      scope.push_back(e.name);
      first_unbound(*e.a, scope, out);
      scope.pop_back();
      return;
    case Expr::Kind::Let:
      first_unbound(*e.a, scope, out);
      scope.push_back(e.name);
      first_unbound(*e.b, scope, out);
      scope.pop_back();
      return;
    case Expr::Kind::App:
    case Expr::Kind::Plus:
      first_unbound(*e.a, scope, out);
      first_unbound(*e.b, scope, out);
      return;
    case Expr::Kind::Lit:
    case Expr::Kind::Err:
      return;
  }
}

}  // namespace

Result<ExprPtr, ParseError> parse_expr(std::string_view input) {
  auto toks = lex(input);
  if (!toks) return Failure<ParseError>{toks.error()};
  auto e = Parser::run(std::move(toks).value());
  if (e && expr_depth(*e.value()) > max_depth) {
    return Failure<ParseError>{{e.value()->pos, "expression nested too deeply"}};
  }
  return e;
}

std::optional<ParseError> check_closed(const Expr& e) {
  std::vector<std::string> scope;
  std::optional<ParseError> out;
  first_unbound(e, scope, out);
  return out;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var: return e.name;
    case Expr::Kind::Lam: return "(\\" + e.name + ". " + print_expr(*e.a) + ")";
    case Expr::Kind::App: return "(" + print_expr(*e.a) + " " + print_expr(*e.b) + ")";
    case Expr::Kind::Lit: return std::to_string(e.value);
    case Expr::Kind::Plus: return "(" + print_expr(*e.a) + " + " + print_expr(*e.b) + ")";
    case Expr::Kind::Err: return "error";
    case Expr::Kind::Let:
      return "(let " + e.name + " = " + print_expr(*e.a) + " in " + print_expr(*e.b) + ")";
  }
  return {};
}

namespace {

Result<ExprPtr, ParseError> parse_closed(std::string_view input) {
  auto e = parse_expr(input);
  if (!e) return e;
  if (auto err = check_closed(*e.value())) return Failure<ParseError>{*err};
  return e;
}

}  // namespace

Result<Term<lang::Sig>, ParseError> parse(std::string_view input) {
  auto e = parse_closed(input);
  if (!e) return Failure<ParseError>{e.error()};
  return to_term<lang::Sig>(e.value());
}

Result<Term<Annotated<lang::Sig, SrcPos>>, ParseError> parse_ann(std::string_view input) {
  auto e = parse_closed(input);
  if (!e) return Failure<ParseError>{e.error()};
  return to_term_ann<lang::Sig>(e.value());
}

}  // namespace pcdt::surface
