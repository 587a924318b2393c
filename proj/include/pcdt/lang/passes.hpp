#pragma once

// Passes over the demo language: pretty printing, desugaring (as a term
// algebra and as a homomorphism), constant folding, call-by-value
// evaluation (staged and fused) and the bound-variable counter.
//
// Every pass is written as one case per signature and lifted to any sum of
// those signatures by visit_node, so pretty works on Sig and SigCore alike
// and const_fold keeps its input signature.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "pcdt/algebra.hpp"
#include "pcdt/hom.hpp"
#include "pcdt/lang/signatures.hpp"
#include "pcdt/lang/value.hpp"
#include "pcdt/term.hpp"

namespace pcdt::lang {

/// x1, x2, ... as an index into the infinite stream.
struct NameStream {
  std::size_t next = 1;

  std::string head() const { return "x" + std::to_string(next); }
  NameStream tail() const { return NameStream{next + 1}; }
};

using PrettyFn = std::function<std::string(NameStream)>;

struct PrettyCases {
  using P = PrettyFn;

  P operator()(const Lam<P, P>& n) const {
    return [f = n.body](NameStream xs) {
      const std::string x = xs.head();
      return "(\\" + x + ". " + f([x](NameStream) { return x; })(xs.tail()) + ")";
    };
  }
  P operator()(const App<P, P>& n) const {
    return [n](NameStream xs) { return "(" + n.fun(xs) + " " + n.arg(xs) + ")"; };
  }
  P operator()(const Lit<P, P>& n) const {
    return [v = n.value](NameStream) { return std::to_string(v); };
  }
  P operator()(const Plus<P, P>& n) const {
    return [n](NameStream xs) { return "(" + n.lhs(xs) + " + " + n.rhs(xs) + ")"; };
  }
  P operator()(const Err<P, P>&) const {
    return [](NameStream) { return std::string("error"); };
  }
  P operator()(const Let<P, P>& n) const {
    return [n](NameStream xs) {
      const std::string x = xs.head();
      return "(let " + x + " = " + n.bound(xs.tail()) + " in " + n.body([x](NameStream) { return x; })(xs.tail()) +
             ")";
    };
  }
};

template <class S>
Alg<S, PrettyFn> pretty_alg() {
  return [](const node_t<S, PrettyFn, PrettyFn>& n) { return visit_node(n, PrettyCases{}); };
}

/// Fully parenthesized rendering; binders draw x1, x2, ... from a stream that
/// sibling subterms share.
template <class S>
std::string pretty(const Term<S>& t) {
  return cata(pretty_alg<S>(), t)(NameStream{});
}

// Desugaring as a parametric term algebra: the carrier is a preterm over the
// target signature at the variable type of the result.

template <class G, class A>
struct DesugarAlgCases {
  using T = Trm<G, A>;

  T operator()(const Let<T, T>& n) const { return app(Ctx<G, A>{}, lam(Ctx<G, A>{}, n.body), n.bound); }

  // inject . dimap Var id
  template <template <class, class> class F>
  T operator()(const F<T, T>& n) const {
    return T::in(inj<G>(dimap<A>([](const A& a) { return T::var(a); }, std::identity{}, n)));
  }
};

template <class S, class G, class A>
Alg<S, Trm<G, A>> desugar_alg() {
  return [](const node_t<S, Trm<G, A>, Trm<G, A>>& n) { return visit_node(n, DesugarAlgCases<G, A>{}); };
}

template <class S, class G = SigCore>
Term<G> desugar_via_cata(const Term<S>& t) {
  return ::pcdt::detail::TermAccess::make<G>(cata(desugar_alg<S, G, Token>(), t));
}

// Desugaring as a homomorphism.

template <class G>
struct DesugarCases {
  template <class A, class B>
  Context<G, A, B> operator()(const Let<A, B>& n) const {
    using C = Context<G, A, B>;
    const Ctx<G, A, MayHole, B> c;
    C fun = c.inject(Lam<A, C>{[body = n.body](const A& x) { return C::hole(body(x)); }});
    return app(c, std::move(fun), C::hole(n.bound));
  }

  template <template <class, class> class F, class A, class B>
  Context<G, A, B> operator()(const F<A, B>& n) const {
    return default_case<G>(n);
  }
};

template <class S = Sig, class G = SigCore>
using DesugarHom = SumHom<S, G, DesugarCases<G>>;

template <class S = Sig, class G = SigCore>
Term<G> desugar(const Term<S>& t) {
  return app_thom(DesugarHom<S, G>{}, t);
}

// Constant folding.

template <class S, class A>
struct ConstFoldCases {
  using T = Trm<S, A>;

  T operator()(const Plus<T, T>& n) const {
    const auto l = project_term<Lit>(n.lhs);
    const auto r = project_term<Lit>(n.rhs);
    if (l && r) return lit(Ctx<S, A>{}, wrapping_add(l->value, r->value));
    return plus(Ctx<S, A>{}, n.lhs, n.rhs);
  }

  template <template <class, class> class F>
  T operator()(const F<T, T>& n) const {
    return T::in(inj<S>(dimap<A>([](const A& a) { return T::var(a); }, std::identity{}, n)));
  }
};

template <class S, class A>
Alg<S, Trm<S, A>> const_fold_alg() {
  return [](const node_t<S, Trm<S, A>, Trm<S, A>>& n) { return visit_node(n, ConstFoldCases<S, A>{}); };
}

/// Bottom-up: a Plus whose folded children are both literals becomes one literal.
template <class S>
Term<S> const_fold(const Term<S>& t) {
  return ::pcdt::detail::TermAccess::make<S>(cata(const_fold_alg<S, Token>(), t));
}

// Call-by-value evaluation with carrier Result<Value>.

struct EvalCases {
  using M = Result<Value>;

  M operator()(const Lam<M, M>& n) const {
    return Value::function([f = n.body](const Value& v) { return f(v); });
  }
  M operator()(const App<M, M>& n) const {
    return n.fun.and_then([&](const Value& x) -> M {
      if (!x.is_function()) return failure("stuck");
      return n.arg.and_then(x.as_function());
    });
  }
  M operator()(const Lit<M, M>& n) const { return Value::integer(n.value); }
  M operator()(const Plus<M, M>& n) const {
    return n.lhs.and_then([&](const Value& x) {
      return n.rhs.and_then([&](const Value& y) -> M {
        if (!x.is_integer() || !y.is_integer()) return failure("stuck");
        return Value::integer(wrapping_add(x.as_integer(), y.as_integer()));
      });
    });
  }
  M operator()(const Err<M, M>&) const { return failure("error"); }
};

template <class S = SigCore>
Alg<S, Result<Value>> eval_alg() {
  return [](const node_t<S, Result<Value>, Result<Value>>& n) { return visit_node(n, EvalCases{}); };
}

inline Result<Value> eval_cbv(const Term<SigCore>& t) { return cata(eval_alg<SigCore>(), t); }

/// eval composed with the desugaring homomorphism: one traversal of t.
template <class S>
Result<Value> eval_fused(const Term<S>& t) {
  return cata(compose_alg_hom(eval_alg<SigCore>(), DesugarHom<S, SigCore>{}), t);
}

// Bound-variable uses: binders are applied to 1, so each use of a bound
// variable contributes 1.

struct CountCases {
  Int operator()(const Lam<Int, Int>& n) const { return n.body(1); }
  Int operator()(const App<Int, Int>& n) const { return n.fun + n.arg; }
  Int operator()(const Lit<Int, Int>&) const { return 0; }
  Int operator()(const Plus<Int, Int>& n) const { return n.lhs + n.rhs; }
  Int operator()(const Err<Int, Int>&) const { return 0; }
  Int operator()(const Let<Int, Int>& n) const { return n.bound + n.body(1); }
};

template <class S>
Alg<S, Int> count_alg() {
  return [](const node_t<S, Int, Int>& n) { return visit_node(n, CountCases{}); };
}

template <class S>
Int count_bound_var_uses(const Term<S>& t) {
  return cata(count_alg<S>(), t);
}

}  // namespace pcdt::lang
