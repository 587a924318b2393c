#pragma once

// The six signatures of the demo language and their per-signature hooks:
// Lam and Let bind, App and Plus have two recursive slots, Lit carries an
// integer and Err is a constant.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pcdt/lang/value.hpp"
#include "pcdt/names.hpp"
#include "pcdt/result.hpp"
#include "pcdt/signature.hpp"
#include "pcdt/term.hpp"

namespace pcdt::lang {

template <class A, class B>
struct Lam {
  std::function<B(A)> body;
};

template <class A, class B>
struct App {
  B fun;
  B arg;
};

template <class A, class B>
struct Lit {
  Int value;
};

template <class A, class B>
struct Plus {
  B lhs;
  B rhs;
};

template <class A, class B>
struct Err {};

template <class A, class B>
struct Let {
  B bound;
  std::function<B(A)> body;
};

using Sig = Signature<Lam, App, Lit, Plus, Err, Let>;
using SigCore = Signature<Lam, App, Lit, Plus, Err>;

// dimap: contravariant slots h become post . h . pre, covariant slots b become post(b).

template <class A2, class A1, class B1, class Pre, class Post>
Lam<A2, mapped_t<Post, B1>> dimap(const Pre& pre, const Post& post, const Lam<A1, B1>& n) {
  return {[pre, post, h = n.body](const A2& a) { return post(h(pre(a))); }};
}

template <class A2, class A1, class B1, class Pre, class Post>
App<A2, mapped_t<Post, B1>> dimap(const Pre&, const Post& post, const App<A1, B1>& n) {
  return {post(n.fun), post(n.arg)};
}

template <class A2, class A1, class B1, class Pre, class Post>
Lit<A2, mapped_t<Post, B1>> dimap(const Pre&, const Post&, const Lit<A1, B1>& n) {
  return {n.value};
}

template <class A2, class A1, class B1, class Pre, class Post>
Plus<A2, mapped_t<Post, B1>> dimap(const Pre&, const Post& post, const Plus<A1, B1>& n) {
  return {post(n.lhs), post(n.rhs)};
}

template <class A2, class A1, class B1, class Pre, class Post>
Err<A2, mapped_t<Post, B1>> dimap(const Pre&, const Post&, const Err<A1, B1>&) {
  return {};
}

template <class A2, class A1, class B1, class Pre, class Post>
Let<A2, mapped_t<Post, B1>> dimap(const Pre& pre, const Post& post, const Let<A1, B1>& n) {
  return {post(n.bound), [pre, post, h = n.body](const A2& a) { return post(h(pre(a))); }};
}

// collect_slots: recursive slots in declaration order, binder slots applied to arg.

template <class A, class B>
std::vector<B> collect_slots(const Lam<A, B>& n, const A& arg) {
  return {n.body(arg)};
}
template <class A, class B>
std::vector<B> collect_slots(const App<A, B>& n, const A&) {
  return {n.fun, n.arg};
}
template <class A, class B>
std::vector<B> collect_slots(const Lit<A, B>&, const A&) {
  return {};
}
template <class A, class B>
std::vector<B> collect_slots(const Plus<A, B>& n, const A&) {
  return {n.lhs, n.rhs};
}
template <class A, class B>
std::vector<B> collect_slots(const Err<A, B>&, const A&) {
  return {};
}
template <class A, class B>
std::vector<B> collect_slots(const Let<A, B>& n, const A& arg) {
  return {n.bound, n.body(arg)};
}

// disequence for the binder-free signatures, left to right.

template <class A, class B, class E>
Result<App<A, B>, E> disequence(const App<A, Result<B, E>>& n) {
  return n.fun.and_then([&](const B& f) {
    return n.arg.and_then([&](const B& x) { return Result<App<A, B>, E>(App<A, B>{f, x}); });
  });
}

template <class A, class B, class E>
Result<Lit<A, B>, E> disequence(const Lit<A, Result<B, E>>& n) {
  return Lit<A, B>{n.value};
}

template <class A, class B, class E>
Result<Plus<A, B>, E> disequence(const Plus<A, Result<B, E>>& n) {
  return n.lhs.and_then([&](const B& l) {
    return n.rhs.and_then([&](const B& r) { return Result<Plus<A, B>, E>(Plus<A, B>{l, r}); });
  });
}

template <class A, class B, class E>
Result<Err<A, B>, E> disequence(const Err<A, Result<B, E>>&) {
  return Err<A, B>{};
}

// Name-instantiated equality.

template <class T, class Rec>
Fresh<bool> eq_node(const Lam<Name, T>& a, const Lam<Name, T>& b, const Rec& rec) {
  return with_name([fa = a.body, fb = b.body, rec](Name x) { return rec(fa(x), fb(x)); });
}
template <class T, class Rec>
Fresh<bool> eq_node(const App<Name, T>& a, const App<Name, T>& b, const Rec& rec) {
  return fresh_and(rec(a.fun, b.fun), rec(a.arg, b.arg));
}
template <class T, class Rec>
Fresh<bool> eq_node(const Lit<Name, T>& a, const Lit<Name, T>& b, const Rec&) {
  return pure_fresh(a.value == b.value);
}
template <class T, class Rec>
Fresh<bool> eq_node(const Plus<Name, T>& a, const Plus<Name, T>& b, const Rec& rec) {
  return fresh_and(rec(a.lhs, b.lhs), rec(a.rhs, b.rhs));
}
template <class T, class Rec>
Fresh<bool> eq_node(const Err<Name, T>&, const Err<Name, T>&, const Rec&) {
  return pure_fresh(true);
}
template <class T, class Rec>
Fresh<bool> eq_node(const Let<Name, T>& a, const Let<Name, T>& b, const Rec& rec) {
  return fresh_and(rec(a.bound, b.bound),
                   with_name([fa = a.body, fb = b.body, rec](Name x) { return rec(fa(x), fb(x)); }));
}

// Ordering.

template <class T, class Rec>
Fresh<std::strong_ordering> compare_node(const Lam<Name, T>& a, const Lam<Name, T>& b, const Rec& rec) {
  return with_name([fa = a.body, fb = b.body, rec](Name x) { return rec(fa(x), fb(x)); });
}
template <class T, class Rec>
Fresh<std::strong_ordering> compare_node(const App<Name, T>& a, const App<Name, T>& b, const Rec& rec) {
  return fresh_lex(rec(a.fun, b.fun), rec(a.arg, b.arg));
}
template <class T, class Rec>
Fresh<std::strong_ordering> compare_node(const Lit<Name, T>& a, const Lit<Name, T>& b, const Rec&) {
  return pure_fresh(a.value <=> b.value);
}
template <class T, class Rec>
Fresh<std::strong_ordering> compare_node(const Plus<Name, T>& a, const Plus<Name, T>& b, const Rec& rec) {
  return fresh_lex(rec(a.lhs, b.lhs), rec(a.rhs, b.rhs));
}
template <class T, class Rec>
Fresh<std::strong_ordering> compare_node(const Err<Name, T>&, const Err<Name, T>&, const Rec&) {
  return pure_fresh(std::strong_ordering::equal);
}
template <class T, class Rec>
Fresh<std::strong_ordering> compare_node(const Let<Name, T>& a, const Let<Name, T>& b, const Rec& rec) {
  return fresh_lex(rec(a.bound, b.bound),
                   with_name([fa = a.body, fb = b.body, rec](Name x) { return rec(fa(x), fb(x)); }));
}

// Constructor-style printing; binder slots render as (\x -> body).

namespace detail {
template <class T, class Rec>
Fresh<std::string> show_binder(const std::function<T(Name)>& body, const Rec& rec) {
  return with_name([body, rec](Name x) {
    return rec(body(x)).map([x](const Shown& s) { return "(\\" + x.render() + " -> " + s.text + ")"; });
  });
}
}  // namespace detail

template <class T, class Rec>
Fresh<Shown> show_node(const Lam<Name, T>& n, const Rec& rec) {
  return detail::show_binder<T>(n.body, rec).map([](const std::string& b) { return Shown{"Lam " + b, false}; });
}
template <class T, class Rec>
Fresh<Shown> show_node(const App<Name, T>& n, const Rec& rec) {
  return rec(n.fun).then([arg = n.arg, rec](const Shown& f) {
    return rec(arg).map([f](const Shown& x) { return Shown{"App " + f.as_arg() + " " + x.as_arg(), false}; });
  });
}
template <class T, class Rec>
Fresh<Shown> show_node(const Lit<Name, T>& n, const Rec&) {
  const std::string v = n.value < 0 ? "(" + std::to_string(n.value) + ")" : std::to_string(n.value);
  return pure_fresh(Shown{"Lit " + v, false});
}
template <class T, class Rec>
Fresh<Shown> show_node(const Plus<Name, T>& n, const Rec& rec) {
  return rec(n.lhs).then([rhs = n.rhs, rec](const Shown& l) {
    return rec(rhs).map([l](const Shown& r) { return Shown{"Plus " + l.as_arg() + " " + r.as_arg(), false}; });
  });
}
template <class T, class Rec>
Fresh<Shown> show_node(const Err<Name, T>&, const Rec&) {
  return pure_fresh(Shown{"Err", true});
}
template <class T, class Rec>
Fresh<Shown> show_node(const Let<Name, T>& n, const Rec& rec) {
  return rec(n.bound).then([body = n.body, rec](const Shown& b) {
    return detail::show_binder<T>(body, rec).map(
        [b](const std::string& f) { return Shown{"Let " + b.as_arg() + " " + f, false}; });
  });
}

// Smart constructors. Binder constructors take a function over contexts and
// store it behind Var, so the function only ever receives Var-wrapped tokens.

template <class S, class A, class H, class B>
Cxt<H, S, A, B> lit(Ctx<S, A, H, B> c, Int n) {
  return c.inject(Lit<A, Cxt<H, S, A, B>>{n});
}

template <class S, class A, class H, class B>
Cxt<H, S, A, B> err(Ctx<S, A, H, B> c) {
  return c.inject(Err<A, Cxt<H, S, A, B>>{});
}

template <class S, class A, class H, class B>
Cxt<H, S, A, B> plus(Ctx<S, A, H, B> c, Cxt<H, S, A, B> lhs, Cxt<H, S, A, B> rhs) {
  return c.inject(Plus<A, Cxt<H, S, A, B>>{std::move(lhs), std::move(rhs)});
}

template <class S, class A, class H, class B>
Cxt<H, S, A, B> app(Ctx<S, A, H, B> c, Cxt<H, S, A, B> fun, Cxt<H, S, A, B> arg) {
  return c.inject(App<A, Cxt<H, S, A, B>>{std::move(fun), std::move(arg)});
}

template <class S, class A, class H, class B, class F>
Cxt<H, S, A, B> lam(Ctx<S, A, H, B> c, F f) {
  using C = Cxt<H, S, A, B>;
  return c.inject(Lam<A, C>{[f = std::move(f)](const A& x) -> C { return f(C::var(x)); }});
}

template <class S, class A, class H, class B, class F>
Cxt<H, S, A, B> let(Ctx<S, A, H, B> c, Cxt<H, S, A, B> bound, F f) {
  using C = Cxt<H, S, A, B>;
  return c.inject(Let<A, C>{std::move(bound), [f = std::move(f)](const A& x) -> C { return f(C::var(x)); }});
}

}  // namespace pcdt::lang
