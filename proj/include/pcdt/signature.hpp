#pragma once

// Difunctor signatures, their right-nested coproducts, and subsumption.
//
// An atomic signature is a class template F<A, B>: A is the contravariant
// (variable) side, B the covariant (recursive) side. Every atomic signature
// provides, through argument-dependent lookup:
//
//   template <class A2, class A1, class B1, class Pre, class Post>
//   auto dimap(const Pre&, const Post&, const F<A1, B1>&) -> F<A2, B2>;
//
//   template <class A, class B>
//   std::vector<B> collect_slots(const F<A, B>&, const A& arg);
//
// and, when it has no contravariant slot,
//
//   template <class A, class B, class E>
//   Result<F<A, B>, E> disequence(const F<A, Result<B, E>>&);
//
// A signature tag is any type with a member alias template node<A, B>.

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "pcdt/result.hpp"

namespace pcdt {

template <class S, class A, class B>
using node_t = typename S::template node<A, B>;

/// Two-way tagged union of signature nodes: exactly one of Inl / Inr.
template <class L, class R>
class Coproduct {
 public:
  using left_type = L;
  using right_type = R;

  static Coproduct inl(L node) { return Coproduct(std::in_place_index<0>, std::move(node)); }
  static Coproduct inr(R node) { return Coproduct(std::in_place_index<1>, std::move(node)); }

  bool is_left() const noexcept { return v_.index() == 0; }
  const L& left() const { return std::get<0>(v_); }
  const R& right() const { return std::get<1>(v_); }

 private:
  template <std::size_t I, class N>
  Coproduct(std::in_place_index_t<I> tag, N&& node) : v_(tag, std::forward<N>(node)) {}

  std::variant<L, R> v_;
};

template <class N>
struct is_coproduct : std::false_type {};
template <class L, class R>
struct is_coproduct<Coproduct<L, R>> : std::true_type {};
template <class N>
inline constexpr bool is_coproduct_v = is_coproduct<N>::value;

/// Variable and recursive parameter of a node type.
template <class N>
struct node_traits;
template <template <class, class> class F, class A, class B>
struct node_traits<F<A, B>> {
  using var_type = A;
  using rec_type = B;
};
template <class L, class R>
struct node_traits<Coproduct<L, R>> : node_traits<L> {};

/// Applies f to the atomic node held by n.
template <class N, class F>
decltype(auto) visit_node(const N& n, F&& f) {
  if constexpr (is_coproduct_v<N>) {
    if (n.is_left()) return visit_node(n.left(), std::forward<F>(f));
    return visit_node(n.right(), std::forward<F>(f));
  } else {
    return std::forward<F>(f)(n);
  }
}

// Summand tag index of a node within its right-nested sum.
template <class N>
std::size_t summand_index(const N& n) {
  if constexpr (is_coproduct_v<N>) {
    return n.is_left() ? 0 : 1 + summand_index(n.right());
  } else {
    return 0;
  }
}

template <template <class, class> class F, template <class, class> class G>
struct same_template : std::false_type {};
template <template <class, class> class F>
struct same_template<F, F> : std::true_type {};

/// A signature assembled from atomic difunctors. Signature<F> is F itself,
/// Signature<F, Gs...> is F + Signature<Gs...>, nested to the right.
template <template <class, class> class... Fs>
struct Signature;

template <template <class, class> class F>
struct Signature<F> {
  template <class A, class B>
  using node = F<A, B>;
  static constexpr std::size_t size = 1;
};

template <template <class, class> class F, template <class, class> class... Rest>
struct Signature<F, Rest...> {
  template <class A, class B>
  using node = Coproduct<F<A, B>, typename Signature<Rest...>::template node<A, B>>;
  static constexpr std::size_t size = 1 + sizeof...(Rest);
};

template <class S, template <class, class> class F>
struct occurrences;
template <template <class, class> class... Fs, template <class, class> class F>
struct occurrences<Signature<Fs...>, F>
    : std::integral_constant<std::size_t, (std::size_t{same_template<Fs, F>::value} + ...)> {};

/// F subsumed by S: F occurs in S exactly once. Multiple occurrences are
/// ambiguous and rejected.
template <template <class, class> class F, class S>
concept Subsumes = occurrences<S, F>::value == 1;

template <class S, class N>
struct contains_node;
template <template <class, class> class... Fs, class N>
struct contains_node<Signature<Fs...>, N>
    : std::bool_constant<(std::is_same_v<Fs<typename node_traits<N>::var_type,
                                            typename node_traits<N>::rec_type>,
                                         N> ||
                          ...)> {};

namespace detail {

template <class S, class N>
struct inj_impl;

template <template <class, class> class F, class N>
struct inj_impl<Signature<F>, N> {
  static N apply(N n) { return n; }
};

template <template <class, class> class F, template <class, class> class G,
          template <class, class> class... Rest, class N>
struct inj_impl<Signature<F, G, Rest...>, N> {
  using A = typename node_traits<N>::var_type;
  using B = typename node_traits<N>::rec_type;
  using Out = node_t<Signature<F, G, Rest...>, A, B>;
  static Out apply(N n) {
    if constexpr (std::is_same_v<N, F<A, B>>) {
      return Out::inl(std::move(n));
    } else {
      return Out::inr(inj_impl<Signature<G, Rest...>, N>::apply(std::move(n)));
    }
  }
};

}  // namespace detail

/// Injects an atomic node into the sum S, walking the Inl/Inr path of its
/// summand.
template <class S, template <class, class> class F, class A, class B>
  requires Subsumes<F, S>
node_t<S, A, B> inj(F<A, B> n) {
  return detail::inj_impl<S, F<A, B>>::apply(std::move(n));
}

/// Injects a node of any sub-signature into S summand-by-summand.
template <class S, class N>
node_t<S, typename node_traits<N>::var_type, typename node_traits<N>::rec_type> embed(const N& n) {
  using Out = node_t<S, typename node_traits<N>::var_type, typename node_traits<N>::rec_type>;
  return visit_node(n, [](const auto& atom) -> Out {
    using Atom = std::decay_t<decltype(atom)>;
    static_assert(contains_node<S, Atom>::value, "summand missing from target signature");
    return detail::inj_impl<S, Atom>::apply(atom);
  });
}

/// Present iff n holds an F-summand.
template <template <class, class> class F, class N>
std::optional<F<typename node_traits<N>::var_type, typename node_traits<N>::rec_type>> proj(
    const N& n) {
  using Target = F<typename node_traits<N>::var_type, typename node_traits<N>::rec_type>;
  if constexpr (is_coproduct_v<N>) {
    if (n.is_left()) return proj<F>(n.left());
    return proj<F>(n.right());
  } else if constexpr (std::is_same_v<N, Target>) {
    return n;
  } else {
    return std::nullopt;
  }
}

/// Projects a node into the sub-signature G, absent when its summand is not
/// part of G.
template <class G, class N>
std::optional<node_t<G, typename node_traits<N>::var_type, typename node_traits<N>::rec_type>>
proj_sub(const N& n) {
  using Out = node_t<G, typename node_traits<N>::var_type, typename node_traits<N>::rec_type>;
  return visit_node(n, [](const auto& atom) -> std::optional<Out> {
    using Atom = std::decay_t<decltype(atom)>;
    if constexpr (contains_node<G, Atom>::value) {
      return detail::inj_impl<G, Atom>::apply(atom);
    } else {
      return std::nullopt;
    }
  });
}

// Coproduct instances of the per-signature interface.

template <class A2, class L, class R, class Pre, class Post>
auto dimap(const Pre& pre, const Post& post, const Coproduct<L, R>& n) {
  using L2 = decltype(dimap<A2>(pre, post, n.left()));
  using R2 = decltype(dimap<A2>(pre, post, n.right()));
  using Out = Coproduct<L2, R2>;
  if (n.is_left()) return Out::inl(dimap<A2>(pre, post, n.left()));
  return Out::inr(dimap<A2>(pre, post, n.right()));
}

template <class L, class R, class A>
auto collect_slots(const Coproduct<L, R>& n, const A& arg) {
  if (n.is_left()) return collect_slots(n.left(), arg);
  return collect_slots(n.right(), arg);
}

template <class L, class R>
  requires requires(const L& l, const R& r) {
    disequence(l);
    disequence(r);
  }
auto disequence(const Coproduct<L, R>& n) {
  using LR = decltype(disequence(n.left()));
  using RR = decltype(disequence(n.right()));
  using Out = Coproduct<typename LR::value_type, typename RR::value_type>;
  using E = typename LR::error_type;
  if (n.is_left()) return disequence(n.left()).map([](const auto& l) { return Out::inl(l); });
  return Result<Out, E>(disequence(n.right()).map([](const auto& r) { return Out::inr(r); }));
}

/// Covariant map: dimap with the identity on the variable side.
template <class Post, class N>
auto fmap(const Post& post, const N& n) {
  return dimap<typename node_traits<N>::var_type>(std::identity{}, post, n);
}

/// Binder-free signatures: every covariant slot can be sequenced.
template <class S>
concept Ditraversable = requires(const node_t<S, int, Result<int>>& n) {
  { disequence(n) } -> std::same_as<Result<node_t<S, int, int>>>;
};

/// Result type of post applied to a recursive slot.
template <class Post, class B>
using mapped_t = std::decay_t<std::invoke_result_t<const Post&, const B&>>;

}  // namespace pcdt
