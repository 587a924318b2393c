#include "pcdt/typed.hpp"

#include <random>
#include <sstream>

#include "pcdt/lang/passes.hpp"

namespace pcdt::typed {

namespace {

using surface::Expr;

template <class S>
struct SortTag {
  using type = S;
};

template <class S>
inline constexpr bool in_universe =
    std::is_same_v<S, TInt> || std::is_same_v<S, SortII> || std::is_same_v<S, SortIII> || std::is_same_v<S, SortHII>;

template <class K>
decltype(auto) with_sort(gen::Ty t, K&& k) {
  switch (t) {
    case gen::Ty::I: return k(SortTag<TInt>{});
    case gen::Ty::II: return k(SortTag<SortII>{});
    case gen::Ty::III: return k(SortTag<SortIII>{});
    case gen::Ty::HII: return k(SortTag<SortHII>{});
  }
  throw std::invalid_argument("unknown type");
}

template <class In>
using AnyExp = std::variant<TExp<In, TInt>, TExp<In, SortII>, TExp<In, SortIII>, TExp<In, SortHII>>;

template <class In>
struct Scope {
  std::string name;
  AnyExp<In> value;
  std::shared_ptr<const Scope> next;
};

template <class In>
using ScopePtr = std::shared_ptr<const Scope<In>>;

[[noreturn]] void ill_typed(const std::string& what) { throw std::invalid_argument("ill-typed expression: " + what); }

template <class In, class I>
TExp<In, I> reify_at(TCtx<In> c, const Expr& e, const ScopePtr<In>& env, const gen::TypedExpr& info);

template <class In, class I>
TExp<In, I> reify_var(const Expr& e, const ScopePtr<In>& env) {
  for (const Scope<In>* s = env.get(); s != nullptr; s = s->next.get()) {
    if (s->name != e.name) continue;
    if (const auto* v = std::get_if<TExp<In, I>>(&s->value)) return *v;
    ill_typed("variable '" + e.name + "' used at the wrong sort");
  }
  ill_typed("unbound variable '" + e.name + "'");
}

template <class In, class I>
TExp<In, I> reify_at(TCtx<In> c, const Expr& e, const ScopePtr<In>& env, const gen::TypedExpr& info) {
  switch (e.kind) {
    case Expr::Kind::Var:
      return reify_var<In, I>(e, env);
    case Expr::Kind::Err:
      return err<I>(c);
    case Expr::Kind::Lit:
      if constexpr (std::is_same_v<I, TInt>) {
        return lit(c, e.value);
      } else {
        ill_typed("literal at an arrow sort");
      }
    case Expr::Kind::Plus:
      if constexpr (std::is_same_v<I, TInt>) {
        return plus(c, reify_at<In, TInt>(c, *e.a, env, info), reify_at<In, TInt>(c, *e.b, env, info));
      } else {
        ill_typed("sum at an arrow sort");
      }
    case Expr::Kind::Lam:
      if constexpr (is_arrow<I>::value) {
        return [&]<class D, class J>(SortTag<TArrow<D, J>>) {
          return lam<D>(c, [c, body = e.a, name = e.name, env, info](TExp<In, D> x) {
            auto inner = std::make_shared<const Scope<In>>(Scope<In>{name, AnyExp<In>(x), env});
            return reify_at<In, J>(c, *body, inner, info);
          });
        }(SortTag<I>{});
      } else {
        ill_typed("lambda at sort Int");
      }
    case Expr::Kind::App: {
      const auto it = info.types->find(e.b.get());
      if (it == info.types->end()) ill_typed("argument without a recorded type");
      return with_sort(it->second, [&]<class D>(SortTag<D>) -> TExp<In, I> {
        if constexpr (in_universe<TArrow<D, I>>) {
          return app(c, reify_at<In, TArrow<D, I>>(c, *e.a, env, info), reify_at<In, D>(c, *e.b, env, info));
        } else {
          ill_typed("application outside the sort universe");
        }
      });
    }
    case Expr::Kind::Let:
      ill_typed("let is not part of the typed core");
  }
  ill_typed("unknown expression");
}

template <class I>
TypedTerm<I> reify_term(const gen::TypedExpr& info) {
  return TypedTerm<I>::build([info](auto c) {
    using In = typename decltype(c)::interpretation;
    return reify_at<In, I>(c, *info.expr, nullptr, info);
  });
}

}  // namespace

AnyTypedTerm reify(const gen::TypedExpr& e) {
  return with_sort(e.type, [&]<class I>(SortTag<I>) -> AnyTypedTerm {
    auto t = reify_term<I>(e);
    // Surface ill-typed input here rather than on first use.
    (void)t.erase();
    return t;
  });
}

std::string typed_demo() {
  const auto example = TypedTerm<TInt>::build([](auto c) {
    return app(c, lam<TInt>(c, [c](auto x) { return plus(c, x, x); }), lit(c, 2));
  });
  std::ostringstream out;
  out << "term: " << lang::pretty(erase(example)) << " : Int\n";
  const auto r = typed_eval(example);
  if (r) {
    out << "typed eval: success " << r.value() << "\n";
  } else {
    out << "typed eval: failure " << r.error() << "\n";
  }

  std::mt19937_64 rng(42);
  gen::Options opts;
  opts.allow_err = false;
  opts.allow_stuck = false;
  opts.allow_let = false;
  const int family = 100;
  int failures = 0;
  for (int i = 0; i < family; ++i) {
    const auto t = reify(gen::random_expr(rng, 6, opts));
    const bool ok = std::visit([](const auto& term) { return typed_eval(term).ok(); }, t);
    if (!ok) ++failures;
  }
  out << "err-free family: " << family << " terms, " << failures << " failures\n";
  return out.str();
}

}  // namespace pcdt::typed
