#pragma once

// Concrete syntax:
//
//   expr ::= "\" ident "." expr | "let" ident "=" expr "in" expr | sum
//   sum  ::= app ("+" app)*
//   app  ::= atom atom*
//   atom ::= ident | integer | "error" | "(" expr ")"
//
// Parsing yields a named AST, which is checked for closedness and then
// converted to a parametric term by passing an environment from names to
// variables down through the binders.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "pcdt/hom.hpp"
#include "pcdt/lang/signatures.hpp"
#include "pcdt/result.hpp"
#include "pcdt/term.hpp"

namespace pcdt::surface {

using lang::Int;

struct SrcPos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SrcPos&, const SrcPos&) = default;
};

std::string to_string(const SrcPos& p);

struct ParseError {
  SrcPos pos;
  std::string message;
};

/// "<line>:<column>: <message>"
std::string to_string(const ParseError& e);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Var, Lam, App, Lit, Plus, Err, Let };

  Kind kind;
  SrcPos pos;
  std::string name;  // Var, and the binder of Lam / Let
  Int value = 0;     // Lit
  ExprPtr a;         // Lam body, App function, Plus lhs, Let bound
  ExprPtr b;         // App argument, Plus rhs, Let body
};

ExprPtr var_expr(std::string name, SrcPos pos = {});
ExprPtr lam_expr(std::string name, ExprPtr body, SrcPos pos = {});
ExprPtr app_expr(ExprPtr fun, ExprPtr arg, SrcPos pos = {});
ExprPtr lit_expr(Int value, SrcPos pos = {});
ExprPtr plus_expr(ExprPtr lhs, ExprPtr rhs, SrcPos pos = {});
ExprPtr err_expr(SrcPos pos = {});
ExprPtr let_expr(std::string name, ExprPtr bound, ExprPtr body, SrcPos pos = {});

/// Deepest chain of nested nodes; the parser rejects inputs above max_depth.
std::size_t expr_depth(const Expr& e);
inline constexpr std::size_t max_depth = 1000;

/// Syntax only; identifiers may be unbound.
Result<ExprPtr, ParseError> parse_expr(std::string_view input);

/// The first unbound identifier in left-to-right order, if any.
std::optional<ParseError> check_closed(const Expr& e);

/// Writes e in the concrete syntax, fully parenthesized.
std::string print_expr(const Expr& e);

namespace detail {

template <class C>
struct Env {
  std::string name;
  C value;
  std::shared_ptr<const Env> next;
};

template <class C>
const C& lookup(const std::shared_ptr<const Env<C>>& env, const std::string& name) {
  for (const Env<C>* e = env.get(); e != nullptr; e = e->next.get()) {
    if (e->name == name) return e->value;
  }
  throw std::invalid_argument("unbound identifier '" + name + "'");
}

// Plain nodes.
template <class S, class A>
struct PlainNode {
  using C = Trm<S, A>;
  template <template <class, class> class F>
  C operator()(F<A, C> n, const SrcPos&) const {
    return C::in(inj<S>(std::move(n)));
  }
};

// Nodes paired with the position of their first lexeme.
template <class S, class A>
struct AnnotatedNode {
  using C = Trm<Annotated<S, SrcPos>, A>;
  template <template <class, class> class F>
  C operator()(F<A, C> n, const SrcPos& p) const {
    return C::in(AnnNode<node_t<S, A, C>, SrcPos>{inj<S>(std::move(n)), p});
  }
};

template <class S, class A, class Make>
struct Convert {
  using C = typename Make::C;
  using EnvPtr = std::shared_ptr<const Env<C>>;

  Make make;

  C operator()(const ExprPtr& e, const EnvPtr& env) const {
    using K = Expr::Kind;
    switch (e->kind) {
      case K::Var:
        return lookup(env, e->name);
      case K::Lam:
        return make(lang::Lam<A, C>{binder(e->name, e->a, env)}, e->pos);
      case K::App:
        return make(lang::App<A, C>{(*this)(e->a, env), (*this)(e->b, env)}, e->pos);
      case K::Lit:
        return make(lang::Lit<A, C>{e->value}, e->pos);
      case K::Plus:
        return make(lang::Plus<A, C>{(*this)(e->a, env), (*this)(e->b, env)}, e->pos);
      case K::Err:
        return make(lang::Err<A, C>{}, e->pos);
      case K::Let:
        if constexpr (Subsumes<lang::Let, S>) {
          return make(lang::Let<A, C>{(*this)(e->a, env), binder(e->name, e->b, env)}, e->pos);
        } else {
          throw std::invalid_argument("let is not part of the target signature");
        }
    }
    throw std::logic_error("unknown expression kind");
  }

  // The stored slot receives a token and binds name to Var(token).
  std::function<C(A)> binder(const std::string& name, const ExprPtr& body, const EnvPtr& env) const {
    return [self = *this, name, body, env](const A& x) {
      return self(body, std::make_shared<const Env<C>>(Env<C>{name, C::var(x), env}));
    };
  }
};

}  // namespace detail

/// Converts a closed named AST to a term over S. Throws std::invalid_argument
/// on unbound identifiers, or on Let when S lacks it.
template <class S = lang::Sig>
Term<S> to_term(const ExprPtr& e) {
  return Term<S>::build([e](auto c) {
    using A = typename decltype(c)::var_type;
    return detail::Convert<S, A, detail::PlainNode<S, A>>{}(e, nullptr);
  });
}

template <class S = lang::Sig>
Term<Annotated<S, SrcPos>> to_term_ann(const ExprPtr& e) {
  return Term<Annotated<S, SrcPos>>::build([e](auto c) {
    using A = typename decltype(c)::var_type;
    return detail::Convert<S, A, detail::AnnotatedNode<S, A>>{}(e, nullptr);
  });
}

Result<Term<lang::Sig>, ParseError> parse(std::string_view input);
Result<Term<Annotated<lang::Sig, SrcPos>>, ParseError> parse_ann(std::string_view input);

}  // namespace pcdt::surface
