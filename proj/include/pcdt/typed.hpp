#pragma once

// A statically sorted core language (integers and arrows) with a tagless
// evaluator. Terms are written once against an abstract interpretation:
//
//   TypedTerm<TInt>::build([](auto c) {
//     return app(c, lam<TInt>(c, [c](auto x) { return plus(c, x, x); }), lit(c, 2));
//   });
//
// and the library runs the builder under each interpretation it ships:
// evaluation into the sort-indexed domain SemDom, and erasure into the
// untyped core signature. Ill-sorted applications do not compile, and the
// evaluator has no path that reports a stuck term.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "pcdt/gen.hpp"
#include "pcdt/lang/signatures.hpp"
#include "pcdt/lang/value.hpp"
#include "pcdt/result.hpp"
#include "pcdt/term.hpp"

namespace pcdt::typed {

using lang::Int;

struct TInt {};
template <class I, class J>
struct TArrow {};

template <class I>
struct SemDomOf;
template <>
struct SemDomOf<TInt> {
  using type = Int;
};
template <class I, class J>
struct SemDomOf<TArrow<I, J>> {
  using type = std::function<Result<typename SemDomOf<J>::type>(const typename SemDomOf<I>::type&)>;
};

/// Int for TInt; fallible functions between the domains for arrows.
template <class I>
using SemDom = typename SemDomOf<I>::type;

template <class T>
struct is_arrow : std::false_type {};
template <class I, class J>
struct is_arrow<TArrow<I, J>> : std::true_type {};

template <class In, class I>
class TExp;

namespace detail {
struct TAccess {
  template <class In, class I>
  static TExp<In, I> wrap(typename In::template Rep<I> r) {
    return TExp<In, I>(std::move(r));
  }
  template <class In, class I>
  static const typename In::template Rep<I>& rep(const TExp<In, I>& e) {
    return e.rep_;
  }
};
}  // namespace detail

/// An expression of sort I under interpretation In. Opaque to builders.
template <class In, class I>
class TExp {
 public:
  using sort = I;

 private:
  explicit TExp(typename In::template Rep<I> r) : rep_(std::move(r)) {}
  typename In::template Rep<I> rep_;
  friend struct detail::TAccess;
};

/// Call-by-value evaluation into SemDom.
struct EvalI {
  template <class I>
  using Rep = Result<SemDom<I>>;

  static Rep<TInt> lit(Int n) { return n; }

  static Rep<TInt> plus(const Rep<TInt>& a, const Rep<TInt>& b) {
    return a.and_then([&](Int x) { return b.map([x](Int y) { return lang::wrapping_add(x, y); }); });
  }

  template <class I, class J>
  static Rep<TArrow<I, J>> lam(std::function<Rep<J>(Rep<I>)> body) {
    return SemDom<TArrow<I, J>>([body = std::move(body)](const SemDom<I>& v) { return body(v); });
  }

  template <class I, class J>
  static Rep<J> app(const Rep<TArrow<I, J>>& f, const Rep<I>& x) {
    return f.and_then([&](const SemDom<TArrow<I, J>>& g) { return x.and_then(g); });
  }

  template <class I>
  static Rep<I> err() {
    return failure("error");
  }
};

/// Erasure into the untyped core signature, at the opaque token type.
struct EraseI {
  template <class I>
  using Rep = Trm<lang::SigCore, Token>;
  using C = Ctx<lang::SigCore, Token>;

  static Rep<TInt> lit(Int n) { return lang::lit(C{}, n); }
  static Rep<TInt> plus(const Rep<TInt>& a, const Rep<TInt>& b) { return lang::plus(C{}, a, b); }

  template <class I, class J>
  static Rep<TArrow<I, J>> lam(std::function<Rep<J>(Rep<I>)> body) {
    return lang::lam(C{}, std::move(body));
  }

  template <class I, class J>
  static Rep<J> app(const Rep<TArrow<I, J>>& f, const Rep<I>& x) {
    return lang::app(C{}, f, x);
  }

  template <class I>
  static Rep<I> err() {
    return lang::err(C{});
  }
};

/// Constructor context handed to typed builders.
template <class In>
struct TCtx {
  using interpretation = In;
};

template <class In>
TExp<In, TInt> lit(TCtx<In>, Int n) {
  return detail::TAccess::wrap<In, TInt>(In::lit(n));
}

template <class In>
TExp<In, TInt> plus(TCtx<In>, const TExp<In, TInt>& a, const TExp<In, TInt>& b) {
  using detail::TAccess;
  return TAccess::wrap<In, TInt>(In::plus(TAccess::rep(a), TAccess::rep(b)));
}

/// f maps a variable of sort I to a body of some sort J.
template <class I, class In, class F>
auto lam(TCtx<In>, F f) {
  using Body = std::invoke_result_t<F&, TExp<In, I>>;
  using J = typename Body::sort;
  static_assert(std::is_same_v<Body, TExp<In, J>>, "lambda body must be a typed expression");
  using detail::TAccess;
  return TAccess::wrap<In, TArrow<I, J>>(In::template lam<I, J>(
      [f = std::move(f)](typename In::template Rep<I> x) { return TAccess::rep(f(TAccess::wrap<In, I>(std::move(x)))); }));
}

template <class In, class I, class J>
TExp<In, J> app(TCtx<In>, const TExp<In, TArrow<I, J>>& f, const TExp<In, I>& x) {
  using detail::TAccess;
  return TAccess::wrap<In, J>(In::template app<I, J>(TAccess::rep(f), TAccess::rep(x)));
}

template <class I, class In>
TExp<In, I> err(TCtx<In>) {
  return detail::TAccess::wrap<In, I>(In::template err<I>());
}

/// A closed, well-sorted term of sort I.
template <class I>
class TypedTerm {
 public:
  using sort = I;

  template <class Builder>
  static TypedTerm build(Builder builder) {
    static_assert(std::is_same_v<std::invoke_result_t<Builder&, TCtx<EvalI>>, TExp<EvalI, I>>,
                  "builder must produce an expression of the term's sort");
    static_assert(std::is_same_v<std::invoke_result_t<Builder&, TCtx<EraseI>>, TExp<EraseI, I>>,
                  "builder must produce an expression of the term's sort");
    auto shared = std::make_shared<const Builder>(std::move(builder));
    return TypedTerm([shared] { return detail::TAccess::rep((*shared)(TCtx<EvalI>{})); },
                     [shared] { return detail::TAccess::rep((*shared)(TCtx<EraseI>{})); });
  }

  Result<SemDom<I>> eval() const { return eval_(); }
  Term<lang::SigCore> erase() const { return ::pcdt::detail::TermAccess::make<lang::SigCore>(erase_()); }

 private:
  TypedTerm(std::function<Result<SemDom<I>>()> ev, std::function<Trm<lang::SigCore, Token>()> er)
      : eval_(std::move(ev)), erase_(std::move(er)) {}

  std::function<Result<SemDom<I>>()> eval_;
  std::function<Trm<lang::SigCore, Token>()> erase_;
};

template <class I>
Result<SemDom<I>> typed_eval(const TypedTerm<I>& t) {
  return t.eval();
}

template <class I>
Term<lang::SigCore> erase(const TypedTerm<I>& t) {
  return t.erase();
}

// Sorts matching the generator's type universe.
using SortII = TArrow<TInt, TInt>;
using SortIII = TArrow<TInt, TArrow<TInt, TInt>>;
using SortHII = TArrow<TArrow<TInt, TInt>, TInt>;

using AnyTypedTerm =
    std::variant<TypedTerm<TInt>, TypedTerm<SortII>, TypedTerm<SortIII>, TypedTerm<SortHII>>;

/// Reifies a generated, well-typed, Let-free expression at its static sort.
/// Throws std::invalid_argument on ill-typed input.
AnyTypedTerm reify(const gen::TypedExpr& e);

/// The worked example (\x. x + x) 2, its value, and a check that a family
/// of 100 generated Err-free terms evaluates without failure.
std::string typed_demo();

}  // namespace pcdt::typed
