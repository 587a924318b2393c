#pragma once

// Term homomorphisms: parametric maps from source nodes to target contexts.
//
// A homomorphism is a value with
//
//   using source = F;
//   using target = G;
//   template <class A, class B>
//   Context<G, A, B> apply(const node_t<F, A, B>&) const;
//
// It may embed A values only through Var and B values only through Hole.
// Homomorphisms compose with each other (compose_hom) and with algebras
// (compose_alg_hom) so that a pipeline traverses its input once.

#include <cstddef>
#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "pcdt/algebra.hpp"
#include "pcdt/signature.hpp"
#include "pcdt/term.hpp"

namespace pcdt {

namespace detail {
struct HomProbeA {};
struct HomProbeB {};
}  // namespace detail

template <class R>
concept Hom = requires(const R& r,
                       const node_t<typename R::source, detail::HomProbeA, detail::HomProbeB>& n) {
  typename R::source;
  typename R::target;
  {
    r.template apply<detail::HomProbeA, detail::HomProbeB>(n)
    } -> std::same_as<Context<typename R::target, detail::HomProbeA, detail::HomProbeB>>;
};

template <class S>
struct MakeHole {
  template <class A, class B>
  struct For {
    Context<S, A, B> operator()(const B& b) const { return Context<S, A, B>::hole(b); }
  };
};

/// In . fmap Hole . inj: re-injects an atomic node into G with every
/// recursive slot left as a hole.
template <class G, template <class, class> class F, class A, class B>
Context<G, A, B> default_case(const F<A, B>& n) {
  return Context<G, A, B>::in(inj<G>(fmap(typename MakeHole<G>::template For<A, B>{}, n)));
}

/// The identity homomorphism on S.
template <class S>
struct IdentityHom {
  using source = S;
  using target = S;

  template <class A, class B>
  Context<S, A, B> apply(const node_t<S, A, B>& n) const {
    return Context<S, A, B>::in(fmap(typename MakeHole<S>::template For<A, B>{}, n));
  }
};

/// Re-injects every node of S into the larger signature G.
template <class S, class G>
struct EmbedHom {
  using source = S;
  using target = G;

  template <class A, class B>
  Context<G, A, B> apply(const node_t<S, A, B>& n) const {
    return Context<G, A, B>::in(embed<G>(fmap(typename MakeHole<G>::template For<A, B>{}, n)));
  }
};

/// Routes every summand of F to Cases. Cases supplies one call operator per
/// custom rule plus a catch-all (typically default_case<G>).
template <class F, class G, class Cases>
struct SumHom {
  using source = F;
  using target = G;
  Cases cases;

  template <class A, class B>
  Context<G, A, B> apply(const node_t<F, A, B>& n) const {
    return visit_node(n, [this](const auto& atom) -> Context<G, A, B> { return cases(atom); });
  }
};

namespace detail {

template <class R, HoleFlag H, class A, class B>
struct AppHom {
  using F = typename R::source;
  using G = typename R::target;
  using Out = Cxt<H, G, A, B>;

  std::shared_ptr<const R> rho;

  Out operator()(const Cxt<H, F, A, B>& c) const {
    if (c.is_var()) return Out::var(c.token());
    if constexpr (std::is_same_v<H, MayHole>) {
      if (c.is_hole()) return Out::hole(c.payload());
    }
    return app_cxt(rho->template apply<A, Out>(fmap(*this, c.node())));
  }
};

}  // namespace detail

/// appHom(rho)(In t) = appCxt(rho(fmap(appHom(rho), t))); Var and Hole pass through.
template <Hom R, HoleFlag H, class A, class B>
Cxt<H, typename R::target, A, B> app_hom(const R& rho, const Cxt<H, typename R::source, A, B>& c) {
  return detail::AppHom<R, H, A, B>{std::make_shared<const R>(rho)}(c);
}

/// Applies a homomorphism to a closed term.
template <Hom R>
Term<typename R::target> app_thom(const R& rho, const Term<typename R::source>& t) {
  return detail::TermAccess::make<typename R::target>(app_hom(rho, detail::TermAccess::rep(t)));
}

template <class G, class S>
Term<G> embed_term(const Term<S>& t) {
  return app_thom(EmbedHom<S, G>{}, t);
}

/// appHom(first) . second: apply second, then first.
template <Hom R1, Hom R2>
  requires std::same_as<typename R2::target, typename R1::source>
struct ComposedHom {
  using source = typename R2::source;
  using target = typename R1::target;
  R1 first;
  R2 second;

  template <class A, class B>
  Context<target, A, B> apply(const node_t<source, A, B>& n) const {
    return app_hom(first, second.template apply<A, B>(n));
  }
};

template <Hom R1, Hom R2>
ComposedHom<R1, R2> compose_hom(R1 outer, R2 inner) {
  return {std::move(outer), std::move(inner)};
}

/// phi composed with rho: free(phi, id) . rho.
template <Hom R, class C>
Alg<typename R::source, C> compose_alg_hom(Alg<typename R::target, C> phi, R rho) {
  using G = typename R::target;
  auto shared_phi = std::make_shared<const Alg<G, C>>(std::move(phi));
  return [shared_phi, rho = std::move(rho)](const node_t<typename R::source, C, C>& n) -> C {
    return free(*shared_phi, std::function<C(const C&)>([](const C& c) { return c; }),
                rho.template apply<C, C>(n));
  };
}

/// Counting adapter: increments *counter on every node transformed.
template <Hom R>
struct CountingHom {
  using source = typename R::source;
  using target = typename R::target;
  R inner;
  std::shared_ptr<std::size_t> counter;

  template <class A, class B>
  Context<target, A, B> apply(const node_t<source, A, B>& n) const {
    ++*counter;
    return inner.template apply<A, B>(n);
  }
};

/// Counting adapter for algebras.
template <class S, class C>
Alg<S, C> counting(Alg<S, C> phi, std::shared_ptr<std::size_t> counter) {
  return [phi = std::move(phi), counter = std::move(counter)](const node_t<S, C, C>& n) {
    ++*counter;
    return phi(n);
  };
}

// Annotation products.

template <class N, class C>
struct AnnNode {
  N node;
  C ann;
};

template <class N, class C>
struct node_traits<AnnNode<N, C>> : node_traits<N> {};

/// Every node of S paired with a constant annotation C.
template <class S, class C>
struct Annotated {
  using base = S;
  using annotation = C;
  template <class A, class B>
  using node = AnnNode<node_t<S, A, B>, C>;
};

template <class A2, class N, class C, class Pre, class Post>
auto dimap(const Pre& pre, const Post& post, const AnnNode<N, C>& n) {
  using N2 = decltype(dimap<A2>(pre, post, n.node));
  return AnnNode<N2, C>{dimap<A2>(pre, post, n.node), n.ann};
}

template <class N, class C, class A>
auto collect_slots(const AnnNode<N, C>& n, const A& arg) {
  return collect_slots(n.node, arg);
}

template <class N, class C>
auto disequence(const AnnNode<N, C>& n) {
  using R = decltype(disequence(n.node));
  using Out = AnnNode<typename R::value_type, C>;
  return disequence(n.node).map([&n](const auto& inner) { return Out{inner, n.ann}; });
}

namespace detail {

template <class G, class C, class A, class B>
struct Annotate {
  C ann;
  Context<Annotated<G, C>, A, B> operator()(const Context<G, A, B>& c) const {
    using Out = Context<Annotated<G, C>, A, B>;
    if (c.is_var()) return Out::var(c.token());
    if (c.is_hole()) return Out::hole(c.payload());
    return Out::in(AnnNode<node_t<G, A, Out>, C>{fmap(*this, c.node()), ann});
  }
};

}  // namespace detail

/// Lifts rho to annotated signatures: every In node of the produced context
/// carries the annotation of the node it was produced from. Var and Hole
/// carry none.
template <Hom R, class C>
struct AnnLiftedHom {
  using source = Annotated<typename R::source, C>;
  using target = Annotated<typename R::target, C>;
  R inner;

  template <class A, class B>
  Context<target, A, B> apply(const node_t<source, A, B>& n) const {
    return detail::Annotate<typename R::target, C, A, B>{n.ann}(inner.template apply<A, B>(n.node));
  }
};

template <class C, Hom R>
AnnLiftedHom<R, C> lift_ann_hom(R rho) {
  return {std::move(rho)};
}

/// Drops annotations.
template <class S, class C>
struct StripAnnHom {
  using source = Annotated<S, C>;
  using target = S;

  template <class A, class B>
  Context<S, A, B> apply(const node_t<source, A, B>& n) const {
    return Context<S, A, B>::in(fmap(typename MakeHole<S>::template For<A, B>{}, n.node));
  }
};

template <class S, class C>
Term<S> strip_ann(const Term<Annotated<S, C>>& t) {
  return app_thom(StripAnnHom<S, C>{}, t);
}

}  // namespace pcdt
