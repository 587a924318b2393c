#pragma once

// Fresh names and the operations that instantiate terms at Name:
// alpha-equivalence, a total order, and constructor-style printing.
//
// Per-signature hooks, found by argument-dependent lookup, for an atomic
// F with recursive slot type T:
//
//   Fresh<bool> eq_node(const F<Name, T>&, const F<Name, T>&, const Rec&);
//   Fresh<std::strong_ordering> compare_node(const F<Name, T>&, const F<Name, T>&, const Rec&);
//   Fresh<Shown> show_node(const F<Name, T>&, const Rec&);
//
// Rec is the recursive comparison / printer for T.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "pcdt/signature.hpp"
#include "pcdt/term.hpp"

namespace pcdt {

namespace detail {
struct NameSupply;
}

/// A bound-variable name drawn from the canonical supply: a, b, ..., z, a1, b1, ...
class Name {
 public:
  std::size_t index() const noexcept { return index_; }

  std::string render() const {
    const std::size_t k = index_ - 1;
    std::string s(1, static_cast<char>('a' + k % 26));
    if (k >= 26) s += std::to_string(k / 26);
    return s;
  }

  friend bool operator==(const Name&, const Name&) = default;
  friend std::strong_ordering operator<=>(const Name&, const Name&) = default;

 private:
  explicit Name(std::size_t index) : index_(index) {}
  std::size_t index_;

  friend struct detail::NameSupply;
};

namespace detail {
struct NameSupply {
  static Name make(std::size_t index) { return Name(index); }
};
}  // namespace detail

/// A computation with access to fresh names. Names are handed out by binder
/// depth: nested scopes always receive distinct names and a run is
/// deterministic.
template <class R>
class Fresh {
 public:
  using value_type = R;

  explicit Fresh(std::function<R(std::size_t)> run) : run_(std::move(run)) {}

  static Fresh pure(R value) {
    return Fresh([value = std::move(value)](std::size_t) { return value; });
  }

  R run(std::size_t used) const { return run_(used); }

  template <class F>
  auto then(F k) const -> std::invoke_result_t<F, const R&> {
    using Next = std::invoke_result_t<F, const R&>;
    return Next([self = *this, k = std::move(k)](std::size_t used) { return k(self.run(used)).run(used); });
  }

  template <class F>
  auto map(F f) const -> Fresh<std::decay_t<std::invoke_result_t<F, const R&>>> {
    using Out = Fresh<std::decay_t<std::invoke_result_t<F, const R&>>>;
    return Out([self = *this, f = std::move(f)](std::size_t used) { return f(self.run(used)); });
  }

 private:
  std::function<R(std::size_t)> run_;
};

/// Supplies k with a name not yet handed out in the enclosing scopes.
template <class K>
auto with_name(K k) -> std::invoke_result_t<K, Name> {
  using Out = std::invoke_result_t<K, Name>;
  return Out([k = std::move(k)](std::size_t used) {
    return k(detail::NameSupply::make(used + 1)).run(used + 1);
  });
}

/// Runs c against the canonical supply.
template <class R>
R eval_fresh(const Fresh<R>& c) {
  return c.run(0);
}

template <class R>
Fresh<R> pure_fresh(R value) {
  return Fresh<R>::pure(std::move(value));
}

inline Fresh<bool> fresh_and(Fresh<bool> a, Fresh<bool> b) {
  return a.then([b = std::move(b)](bool x) { return x ? b : pure_fresh(false); });
}

inline Fresh<std::strong_ordering> fresh_lex(Fresh<std::strong_ordering> a, Fresh<std::strong_ordering> b) {
  return a.then([b = std::move(b)](std::strong_ordering o) { return o != 0 ? pure_fresh(o) : b; });
}

/// Printed form of a constructor application.
struct Shown {
  std::string text;
  bool atomic;

  std::string as_arg() const { return atomic ? text : "(" + text + ")"; }
};

// Coproduct instances.

template <class L, class R, class Rec>
Fresh<bool> eq_node(const Coproduct<L, R>& a, const Coproduct<L, R>& b, const Rec& rec) {
  if (a.is_left() != b.is_left()) return pure_fresh(false);
  if (a.is_left()) return eq_node(a.left(), b.left(), rec);
  return eq_node(a.right(), b.right(), rec);
}

template <class L, class R, class Rec>
Fresh<std::strong_ordering> compare_node(const Coproduct<L, R>& a, const Coproduct<L, R>& b, const Rec& rec) {
  if (a.is_left() && !b.is_left()) return pure_fresh(std::strong_ordering::less);
  if (!a.is_left() && b.is_left()) return pure_fresh(std::strong_ordering::greater);
  if (a.is_left()) return compare_node(a.left(), b.left(), rec);
  return compare_node(a.right(), b.right(), rec);
}

template <class L, class R, class Rec>
Fresh<Shown> show_node(const Coproduct<L, R>& n, const Rec& rec) {
  if (n.is_left()) return show_node(n.left(), rec);
  return show_node(n.right(), rec);
}

namespace detail {

template <class S>
struct NameEq {
  Fresh<bool> operator()(const Trm<S, Name>& a, const Trm<S, Name>& b) const {
    if (a.is_var() && b.is_var()) return pure_fresh(a.token() == b.token());
    if (a.is_in() && b.is_in()) return eq_node(a.node(), b.node(), *this);
    return pure_fresh(false);
  }
};

template <class S>
struct NameCompare {
  Fresh<std::strong_ordering> operator()(const Trm<S, Name>& a, const Trm<S, Name>& b) const {
    // Var sorts before In.
    if (a.is_var() && b.is_var()) return pure_fresh(a.token() <=> b.token());
    if (a.is_var()) return pure_fresh(std::strong_ordering::less);
    if (b.is_var()) return pure_fresh(std::strong_ordering::greater);
    return compare_node(a.node(), b.node(), *this);
  }
};

template <class S>
struct NameShow {
  Fresh<Shown> operator()(const Trm<S, Name>& t) const {
    if (t.is_var()) return pure_fresh(Shown{t.token().render(), true});
    return show_node(t.node(), *this);
  }
};

}  // namespace detail

/// Structural equality of preterms at Name; binder slots are applied to one
/// shared fresh name.
template <class S>
bool preterm_eq(const Trm<S, Name>& a, const Trm<S, Name>& b) {
  return eval_fresh(detail::NameEq<S>{}(a, b));
}

template <class S>
bool alpha_eq(const Term<S>& a, const Term<S>& b) {
  return preterm_eq(instantiate<Name>(a), instantiate<Name>(b));
}

/// Total order consistent with alpha_eq: constructor tag (summand order),
/// then slots left to right, names by supply index.
template <class S>
std::strong_ordering alpha_compare(const Term<S>& a, const Term<S>& b) {
  return eval_fresh(detail::NameCompare<S>{}(instantiate<Name>(a), instantiate<Name>(b)));
}

template <class S>
std::string show_preterm(const Trm<S, Name>& t) {
  return eval_fresh(detail::NameShow<S>{}(t)).text;
}

/// Constructor-style rendering, e.g. Lam (\a -> Plus a (Lit 1)).
template <class S>
std::string struct_show(const Term<S>& t) {
  return show_preterm(instantiate<Name>(t));
}

}  // namespace pcdt
