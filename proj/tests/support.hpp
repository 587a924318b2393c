#pragma once

// Shared fixtures for the unit suites and the acceptance binary: the running
// example, seeded corpora, node and value comparison, sample homomorphisms
// and the law checks that both the suites and the acceptance run use.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pcdt/algebra.hpp"
#include "pcdt/gen.hpp"
#include "pcdt/hom.hpp"
#include "pcdt/lang/passes.hpp"
#include "pcdt/names.hpp"
#include "pcdt/surface.hpp"
#include "pcdt/term.hpp"

namespace ts {

using namespace pcdt;
using namespace pcdt::lang;
using pcdt::surface::ExprPtr;
using pcdt::surface::SrcPos;

inline constexpr std::uint64_t seed = 42;
inline constexpr int cases = 200;

/// let x = 2 in (\y. y + x) 3, built with the smart constructors.
inline Term<Sig> running_example() {
  return Term<Sig>::build([](auto c) {
    return let(c, lit(c, 2), [c](auto x) { return app(c, lam(c, [c, x](auto y) { return plus(c, y, x); }), lit(c, 3)); });
  });
}

/// (\x. ((\y. y + x) 3)) 2, by hand.
inline Term<SigCore> running_example_desugared() {
  return Term<SigCore>::build([](auto c) {
    return app(c, lam(c, [c](auto x) { return app(c, lam(c, [c, x](auto y) { return plus(c, y, x); }), lit(c, 3)); }),
               lit(c, 2));
  });
}

struct Corpus {
  std::vector<ExprPtr> exprs;
  std::vector<Term<Sig>> terms;
};

inline Corpus random_corpus(int n, std::uint64_t s = seed, int depth = 6, gen::Options opts = {}) {
  std::mt19937_64 rng(s);
  Corpus c;
  for (int i = 0; i < n; ++i) {
    auto e = gen::random_expr(rng, depth, opts).expr;
    c.exprs.push_back(e);
    c.terms.push_back(surface::to_term(e));
  }
  return c;
}

/// Consistently renames every binder of e: an alpha-variant.
inline ExprPtr rename_binders(const ExprPtr& e, const std::string& suffix,
                              std::map<std::string, std::vector<std::string>>& scope) {
  using K = surface::Expr::Kind;
  switch (e->kind) {
    case K::Var: {
      const auto& s = scope[e->name];
      return surface::var_expr(s.empty() ? e->name : s.back());
    }
    case K::Lam: {
      scope[e->name].push_back(e->name + suffix);
      auto body = rename_binders(e->a, suffix, scope);
      scope[e->name].pop_back();
      return surface::lam_expr(e->name + suffix, body);
    }
    case K::Let: {
      auto bound = rename_binders(e->a, suffix, scope);
      scope[e->name].push_back(e->name + suffix);
      auto body = rename_binders(e->b, suffix, scope);
      scope[e->name].pop_back();
      return surface::let_expr(e->name + suffix, bound, body);
    }
    case K::App: return surface::app_expr(rename_binders(e->a, suffix, scope), rename_binders(e->b, suffix, scope));
    case K::Plus: return surface::plus_expr(rename_binders(e->a, suffix, scope), rename_binders(e->b, suffix, scope));
    case K::Lit:
    case K::Err: return e;
  }
  return e;
}

inline Term<Sig> alpha_variant(const ExprPtr& e, const std::string& suffix) {
  std::map<std::string, std::vector<std::string>> scope;
  return surface::to_term(rename_binders(e, suffix, scope));
}

// ---------------------------------------------------------------------------
// Node comparison: constructor tag, static payload, and every slot applied
// to each sampled argument.

inline const std::vector<int>& sample_args() {
  static const std::vector<int> args{-7, -1, 0, 1, 2, 3, 5, 8, 13, 100};
  return args;
}

template <class N>
bool same_node(const N& a, const N& b) {
  if (summand_index(a) != summand_index(b)) return false;
  const auto la = proj<Lit>(a);
  const auto lb = proj<Lit>(b);
  if (la.has_value() != lb.has_value()) return false;
  if (la && la->value != lb->value) return false;
  for (int x : sample_args()) {
    if (collect_slots(a, x) != collect_slots(b, x)) return false;
  }
  return true;
}

struct Affine {
  long k;
  long c;
  long operator()(long x) const { return k * x + c; }
};

struct AffineInt {
  int k;
  int c;
  int operator()(int x) const { return k * x + c; }
};

template <template <class, class> class F>
struct Tag {};

template <template <class, class> class F>
F<int, long> random_node(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-50, 50);
  const Affine h{d(rng), d(rng)};
  if constexpr (same_template<F, Lam>::value) {
    return {[h](int a) { return h(a); }};
  } else if constexpr (same_template<F, Let>::value) {
    return {d(rng), [h](int a) { return h(a); }};
  } else if constexpr (same_template<F, App>::value) {
    return {d(rng), d(rng)};
  } else if constexpr (same_template<F, Plus>::value) {
    return {d(rng), d(rng)};
  } else if constexpr (same_template<F, Lit>::value) {
    return {static_cast<Int>(d(rng))};
  } else {
    return {};
  }
}

/// Identity and composition laws of dimap for F, on `cases` random nodes,
/// both as an atomic node and injected into Sig.
template <template <class, class> class F>
bool difunctor_laws(std::mt19937_64& rng, int n = cases) {
  std::uniform_int_distribution<int> di(-9, 9);
  std::uniform_int_distribution<long> dl(-9, 9);
  for (int i = 0; i < n; ++i) {
    const F<int, long> node = random_node<F>(rng);
    const AffineInt f{di(rng), di(rng)};
    const AffineInt g{di(rng), di(rng)};
    const Affine h{dl(rng), dl(rng)};
    const Affine k{dl(rng), dl(rng)};
    const auto fg = [f, g](int x) { return f(g(x)); };
    const auto hk = [h, k](long x) { return h(k(x)); };

    if (!same_node(dimap<int>(std::identity{}, std::identity{}, node), node)) return false;
    if (!same_node(dimap<int>(fg, hk, node), dimap<int>(g, h, dimap<int>(f, k, node)))) return false;

    if constexpr (Subsumes<F, Sig>) {
      const auto big = inj<Sig>(node);
      if (!same_node(dimap<int>(std::identity{}, std::identity{}, big), big)) return false;
      if (!same_node(dimap<int>(fg, hk, big), dimap<int>(g, h, dimap<int>(f, k, big)))) return false;
      if (!same_node(fmap(h, big), dimap<int>(std::identity{}, h, big))) return false;
    }
  }
  return true;
}

inline bool all_difunctor_laws(std::mt19937_64& rng) {
  return difunctor_laws<Lam>(rng) && difunctor_laws<App>(rng) && difunctor_laws<Lit>(rng) &&
         difunctor_laws<Plus>(rng) && difunctor_laws<Err>(rng) && difunctor_laws<Let>(rng);
}

/// proj<G>(inj<S>(n)) is present exactly for G = F, and then equals n.
template <class S, template <class, class> class F, template <class, class> class... All>
bool proj_inj_for(std::mt19937_64& rng) {
  const F<int, long> n = random_node<F>(rng);
  const auto big = inj<S>(n);
  bool ok = true;
  (
      [&] {
        const auto p = proj<All>(big);
        if constexpr (same_template<All, F>::value) {
          ok = ok && p.has_value() && same_node(*p, n);
        } else {
          ok = ok && !p.has_value();
        }
      }(),
      ...);
  return ok;
}

inline bool proj_inj_round_trips(std::mt19937_64& rng) {
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    ok = ok && proj_inj_for<Sig, Lam, Lam, App, Lit, Plus, Err, Let>(rng) &&
         proj_inj_for<Sig, App, Lam, App, Lit, Plus, Err, Let>(rng) &&
         proj_inj_for<Sig, Lit, Lam, App, Lit, Plus, Err, Let>(rng) &&
         proj_inj_for<Sig, Plus, Lam, App, Lit, Plus, Err, Let>(rng) &&
         proj_inj_for<Sig, Err, Lam, App, Lit, Plus, Err, Let>(rng) &&
         proj_inj_for<Sig, Let, Lam, App, Lit, Plus, Err, Let>(rng) &&
         proj_inj_for<SigCore, Lam, Lam, App, Lit, Plus, Err>(rng) &&
         proj_inj_for<SigCore, App, Lam, App, Lit, Plus, Err>(rng) &&
         proj_inj_for<SigCore, Lit, Lam, App, Lit, Plus, Err>(rng) &&
         proj_inj_for<SigCore, Plus, Lam, App, Lit, Plus, Err>(rng) &&
         proj_inj_for<SigCore, Err, Lam, App, Lit, Plus, Err>(rng);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Values.

inline const std::vector<Int>& sample_ints() {
  static const std::vector<Int> xs{-3, 0, 1, 2, 5, 7, 10, 100};
  return xs;
}

/// Integers and messages compared directly, functions on sampled integers.
inline bool same_value(const Result<Value>& a, const Result<Value>& b, int depth = 2) {
  if (a.ok() != b.ok()) return false;
  if (!a.ok()) return a.error() == b.error();
  const Value& x = a.value();
  const Value& y = b.value();
  if (x.is_integer() != y.is_integer()) return false;
  if (x.is_integer()) return x.as_integer() == y.as_integer();
  if (depth == 0) return true;
  for (Int n : sample_ints()) {
    if (!same_value(x.as_function()(Value::integer(n)), y.as_function()(Value::integer(n)), depth - 1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sample homomorphisms.

/// Plus(a, b) becomes Plus(b, a).
template <class G>
struct SwapPlusCases {
  template <class A, class B>
  Context<G, A, B> operator()(const Plus<A, B>& n) const {
    using C = Context<G, A, B>;
    return plus(Ctx<G, A, MayHole, B>{}, C::hole(n.rhs), C::hole(n.lhs));
  }
  template <template <class, class> class F, class A, class B>
  Context<G, A, B> operator()(const F<A, B>& n) const {
    return default_case<G>(n);
  }
};

/// App(f, x) becomes App(\v. App(f, v), x): binds a fresh variable.
template <class G>
struct EtaAppCases {
  template <class A, class B>
  Context<G, A, B> operator()(const App<A, B>& n) const {
    using C = Context<G, A, B>;
    const Ctx<G, A, MayHole, B> c;
    C wrapper = c.inject(Lam<A, C>{[f = n.fun, c](const A& v) { return app(c, C::hole(f), C::var(v)); }});
    return app(c, std::move(wrapper), C::hole(n.arg));
  }
  template <template <class, class> class F, class A, class B>
  Context<G, A, B> operator()(const F<A, B>& n) const {
    return default_case<G>(n);
  }
};

/// Lit n becomes Lit (n + 1).
template <class G>
struct IncLitCases {
  template <class A, class B>
  Context<G, A, B> operator()(const Lit<A, B>& n) const {
    return lit(Ctx<G, A, MayHole, B>{}, n.value + 1);
  }
  template <template <class, class> class F, class A, class B>
  Context<G, A, B> operator()(const F<A, B>& n) const {
    return default_case<G>(n);
  }
};

using SwapPlus = SumHom<SigCore, SigCore, SwapPlusCases<SigCore>>;
using EtaApp = SumHom<SigCore, SigCore, EtaAppCases<SigCore>>;
using IncLitCore = SumHom<SigCore, SigCore, IncLitCases<SigCore>>;
using IncLitFull = SumHom<Sig, Sig, IncLitCases<Sig>>;
using Desugar = DesugarHom<Sig, SigCore>;

/// Exact structure at Name: binder slots applied to one shared name.
template <class S>
bool same_structure(const Term<S>& a, const Term<S>& b) {
  return preterm_eq(instantiate<Name>(a), instantiate<Name>(b));
}

/// appHom(r1) . appHom(r2) = appHom(r1 . r2) on every term of the corpus.
template <class R1, class R2>
bool hom_fusion(const R1& r1, const R2& r2, const std::vector<Term<typename R2::source>>& terms) {
  const auto composed = compose_hom(r1, r2);
  for (const auto& t : terms) {
    if (!same_structure(app_thom(r1, app_thom(r2, t)), app_thom(composed, t))) return false;
  }
  return true;
}

template <class R>
std::vector<Term<typename R::target>> map_terms(const R& r, const std::vector<Term<typename R::source>>& terms) {
  std::vector<Term<typename R::target>> out;
  for (const auto& t : terms) out.push_back(app_thom(r, t));
  return out;
}

inline std::vector<Term<SigCore>> core_corpus(const std::vector<Term<Sig>>& terms) {
  return map_terms(Desugar{}, terms);
}

inline bool all_hom_fusion(const std::vector<Term<Sig>>& terms) {
  const auto core = core_corpus(terms);
  return hom_fusion(SwapPlus{}, Desugar{}, terms) && hom_fusion(EtaApp{}, Desugar{}, terms) &&
         hom_fusion(IncLitCore{}, SwapPlus{}, core) && hom_fusion(Desugar{}, IncLitFull{}, terms) &&
         hom_fusion(EtaApp{}, EtaApp{}, core);
}

/// cata(phi) . appTHom(rho) = cata(phi composed with rho), for pretty, count and eval.
template <class R>
bool alg_fusion(const R& rho, const std::vector<Term<typename R::source>>& terms) {
  using G = typename R::target;
  for (const auto& t : terms) {
    const auto staged = app_thom(rho, t);
    const auto pretty_fused = cata(compose_alg_hom(pretty_alg<G>(), rho), t)(NameStream{});
    if (pretty(staged) != pretty_fused) return false;
    if (count_bound_var_uses(staged) != cata(compose_alg_hom(count_alg<G>(), rho), t)) return false;
    if constexpr (std::is_same_v<G, SigCore>) {
      if (!same_value(eval_cbv(staged), cata(compose_alg_hom(eval_alg<SigCore>(), rho), t))) return false;
    }
  }
  return true;
}

inline bool all_alg_fusion(const std::vector<Term<Sig>>& terms) {
  const auto core = core_corpus(terms);
  return alg_fusion(Desugar{}, terms) && alg_fusion(compose_hom(SwapPlus{}, Desugar{}), terms) &&
         alg_fusion(EtaApp{}, core) && alg_fusion(IncLitFull{}, terms);
}

inline bool desugar_forms_agree(const std::vector<Term<Sig>>& terms) {
  return std::all_of(terms.begin(), terms.end(),
                     [](const Term<Sig>& t) { return alpha_eq(desugar(t), desugar_via_cata(t)); });
}

// ---------------------------------------------------------------------------
// Traversal at a concrete variable type.

/// Calls visit on every In node, entering each binder once with Unit.
template <class S, class F>
void walk(const Trm<S, Unit>& t, F&& visit) {
  if (!t.is_in()) return;
  visit(t.node());
  for (const auto& sub : collect_slots(t.node(), Unit{})) walk<S>(sub, visit);
}

inline const char* const summand_names[] = {"Lam", "App", "Lit", "Plus", "Err", "Let"};

/// Multiset of (position, constructor) over an annotated term.
template <class S>
std::multiset<std::tuple<int, int, std::string>> annotations(const Term<Annotated<S, SrcPos>>& t) {
  std::multiset<std::tuple<int, int, std::string>> out;
  walk<Annotated<S, SrcPos>>(instantiate<Unit>(t), [&](const auto& n) {
    out.emplace(n.ann.line, n.ann.column, summand_names[summand_index(n.node)]);
  });
  return out;
}

/// Annotations the lifted desugaring must produce: each Let at p becomes a Lam
/// and an App at p, every other node keeps its own.
inline std::multiset<std::tuple<int, int, std::string>> expected_desugared(
    const std::multiset<std::tuple<int, int, std::string>>& in) {
  std::multiset<std::tuple<int, int, std::string>> out;
  for (const auto& [l, c, k] : in) {
    if (k == "Let") {
      out.emplace(l, c, "Lam");
      out.emplace(l, c, "App");
    } else {
      out.emplace(l, c, k);
    }
  }
  return out;
}

/// Random annotated terms: corpus expressions printed and re-parsed, so the
/// positions are real source positions.
inline std::vector<Term<Annotated<Sig, SrcPos>>> annotated_corpus(const Corpus& c) {
  std::vector<Term<Annotated<Sig, SrcPos>>> out;
  for (const auto& e : c.exprs) out.push_back(surface::parse_ann(surface::print_expr(*e)).value());
  return out;
}

inline bool annotation_commutes(const std::vector<Term<Annotated<Sig, SrcPos>>>& terms) {
  const auto lifted = lift_ann_hom<SrcPos>(Desugar{});
  for (const auto& t : terms) {
    const auto lhs = strip_ann(app_thom(lifted, t));
    const auto rhs = desugar(strip_ann(t));
    if (!alpha_eq(lhs, rhs)) return false;
  }
  return true;
}

inline bool annotation_propagates(const std::vector<Term<Annotated<Sig, SrcPos>>>& terms) {
  const auto lifted = lift_ann_hom<SrcPos>(Desugar{});
  for (const auto& t : terms) {
    if (annotations<SigCore>(app_thom(lifted, t)) != expected_desugared(annotations<Sig>(t))) return false;
  }
  return true;
}

}  // namespace ts
