#pragma once

// Algebras and their folds: cata over closed terms and preterms, the
// effectful cataM for binder-free signatures, free over contexts, and
// deepProject.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "pcdt/result.hpp"
#include "pcdt/signature.hpp"
#include "pcdt/term.hpp"

namespace pcdt {

/// Collapses one node whose slots already hold carrier values.
template <class S, class C>
using Alg = std::function<C(const node_t<S, C, C>&)>;

/// Algebra with the effect in its result only.
template <class S, class C, class E = std::string>
using AlgM = std::function<Result<C, E>(const node_t<S, C, C>&)>;

namespace detail {

// The inner fold over stored closed terms. Binder slots receive carrier
// values, which are boxed as tokens and come back out at the Var equation.
template <class S, class C>
struct CataFold {
  std::shared_ptr<const Alg<S, C>> phi;

  C operator()(const Trm<S, Token>& t) const {
    if (t.is_var()) return TokenAccess::unwrap<C>(t.token());
    return (*phi)(dimap<C>(WrapToken<C>{}, *this, t.node()));
  }
};

template <class S, class C>
struct CataPreFold {
  std::shared_ptr<const Alg<S, C>> phi;

  C operator()(const Trm<S, C>& t) const {
    if (t.is_var()) return t.token();
    return (*phi)(fmap(*this, t.node()));
  }
};

template <class S, class C, class E>
struct CataMFold {
  std::shared_ptr<const AlgM<S, C, E>> phi;

  Result<C, E> operator()(const Trm<S, Token>& t) const {
    if (t.is_var()) return TokenAccess::unwrap<C>(t.token());
    // Slots are folded in declaration order; once one fails the rest are skipped.
    std::optional<E> failed;
    const auto slot = [this, &failed](const Trm<S, Token>& sub) -> Result<C, E> {
      if (failed) return Failure<E>{*failed};
      auto r = (*this)(sub);
      if (!r) failed = r.error();
      return r;
    };
    return disequence(dimap<C>(WrapToken<C>{}, slot, t.node()))
        .and_then([this](const node_t<S, C, C>& n) { return (*phi)(n); });
  }
};

template <class S, class C, HoleFlag H, class B>
struct FreeFold {
  std::shared_ptr<const Alg<S, C>> phi;
  std::shared_ptr<const std::function<C(const B&)>> hole_map;

  C operator()(const Cxt<H, S, C, B>& c) const {
    if (c.is_var()) return c.token();
    if (c.is_hole()) return (*hole_map)(c.payload());
    return (*phi)(fmap(*this, c.node()));
  }
};

}  // namespace detail

/// Folds a closed term: cat(In n) = phi(fmap(cat, n)), cat(Var x) = x.
template <class S, class C>
C cata(const Alg<S, C>& phi, const Term<S>& t) {
  detail::CataFold<S, C> cat{std::make_shared<const Alg<S, C>>(phi)};
  return cat(detail::TermAccess::rep(t));
}

/// The same fold over a preterm already at the carrier's variable type.
template <class S, class C>
C cata_pre(const Alg<S, C>& phi, const Trm<S, C>& pre) {
  detail::CataPreFold<S, C> cat{std::make_shared<const Alg<S, C>>(phi)};
  return cat(pre);
}

/// Effectful fold. Slot effects run left to right in declaration order; the
/// first failure aborts. Binder signatures have no disequence and are
/// rejected here.
template <class S, class C, class E>
  requires Ditraversable<S>
Result<C, E> cata_m(const AlgM<S, C, E>& phi, const Term<S>& t) {
  detail::CataMFold<S, C, E> cat{std::make_shared<const AlgM<S, C, E>>(phi)};
  return cat(detail::TermAccess::rep(t));
}

/// Lifts a pure algebra into the effectful one.
template <class S, class C>
AlgM<S, C> lift_alg(Alg<S, C> phi) {
  return [phi = std::move(phi)](const node_t<S, C, C>& n) -> Result<C> { return phi(n); };
}

/// Folds a context: holes go through hole_map, Var x is x.
template <class S, class C, HoleFlag H, class B>
C free(const Alg<S, C>& phi, std::function<C(const B&)> hole_map, const Cxt<H, S, C, B>& c) {
  detail::FreeFold<S, C, H, B> fold{std::make_shared<const Alg<S, C>>(phi),
                                    std::make_shared<const std::function<C(const B&)>>(std::move(hole_map))};
  return fold(c);
}

namespace detail {

// Binder-free nodes never touch their variable side; this changes its type.
template <class A2, class N>
auto retype_var(const N& n) {
  return dimap<A2>(
      [](const A2&) -> typename node_traits<N>::var_type {
        throw std::logic_error("binder-free signature applied a variable slot");
      },
      std::identity{}, n);
}

}  // namespace detail

/// Present iff every node of t lies in the sub-signature G.
template <class G, class S>
  requires Ditraversable<S>
std::optional<Term<G>> deep_project(const Term<S>& t) {
  using Out = Trm<G, Token>;
  AlgM<S, Out> phi = [](const node_t<S, Out, Out>& n) -> Result<Out> {
    auto g = proj_sub<G>(n);
    if (!g) return failure("node outside target signature");
    return Out::in(detail::retype_var<Token>(*g));
  };
  auto r = cata_m(phi, t);
  if (!r) return std::nullopt;
  return detail::TermAccess::make<G>(r.value());
}

}  // namespace pcdt
