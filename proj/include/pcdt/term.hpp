#pragma once

// Contexts, preterms and closed parametric terms.
//
//   Cxt<H, S, A, B>   In(node) | Var(token : A) | Hole(payload : B)
//   Context<S, A, B>  contexts that may contain holes
//   Trm<S, A>         hole-free preterms over variable type A
//   Term<S>           closed terms, usable at any variable type
//
// A Term is built by a generic builder that receives a Ctx<S, A> and returns
// a Trm<S, A>. The library invokes it once, at the opaque variable type
// Token. Tokens have no public constructor and no observers, so a builder
// can only ever place a token it was handed inside a Var node: concrete
// variable payloads, folds over bound variables and case analysis on them
// have nothing to work with. Binder slots are closures over immutable data
// and must be total, terminating and free of side effects.

#include <any>
#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>

#include "pcdt/signature.hpp"

namespace pcdt {

struct MayHole {};
struct NoHole {};

struct Unit {
  friend bool operator==(const Unit&, const Unit&) = default;
};

template <class H>
concept HoleFlag = std::same_as<H, MayHole> || std::same_as<H, NoHole>;

template <HoleFlag H, class S, class A, class B = Unit>
class Cxt;

template <class S, class A, class B>
using Context = Cxt<MayHole, S, A, B>;

template <class S, class A>
using Trm = Cxt<NoHole, S, A, Unit>;

namespace detail {
struct TokenAccess;
struct TermAccess;
}  // namespace detail

/// Opaque variable type at which closed terms are stored.
class Token {
 public:
  Token(const Token&) = default;
  Token(Token&&) noexcept = default;
  Token& operator=(const Token&) = default;
  Token& operator=(Token&&) noexcept = default;

 private:
  template <class T>
  explicit Token(std::in_place_t, T value) : box_(std::make_shared<const std::any>(std::move(value))) {}

  std::shared_ptr<const std::any> box_;

  friend struct detail::TokenAccess;
};

namespace detail {

struct TokenAccess {
  template <class T>
  static Token wrap(T value) {
    return Token(std::in_place, std::move(value));
  }
  template <class T>
  static const T& unwrap(const Token& t) {
    const T* p = std::any_cast<T>(t.box_.get());
    if (p == nullptr) throw std::logic_error("variable token escaped the scope of its binder");
    return *p;
  }
};

template <class T>
struct WrapToken {
  Token operator()(const T& value) const { return TokenAccess::wrap(value); }
};

// Instrumentation: In-node constructions per context type on this thread.
template <class C>
std::size_t& node_allocations() {
  thread_local std::size_t count = 0;
  return count;
}

}  // namespace detail

template <HoleFlag H, class S, class A, class B>
class Cxt {
 public:
  using hole_flag = H;
  using signature = S;
  using var_type = A;
  using hole_type = B;
  using node_type = node_t<S, A, Cxt>;

  static Cxt in(node_type n) {
    ++detail::node_allocations<Cxt>();
    return Cxt(std::make_shared<const Rep>(Rep{std::variant<node_type, VarSlot, HoleSlot>(
        std::in_place_index<0>, std::move(n))}));
  }

  static Cxt var(A token) {
    return Cxt(std::make_shared<const Rep>(
        Rep{std::variant<node_type, VarSlot, HoleSlot>(std::in_place_index<1>, VarSlot{std::move(token)})}));
  }

  static Cxt hole(B payload)
    requires std::same_as<H, MayHole>
  {
    return Cxt(std::make_shared<const Rep>(Rep{std::variant<node_type, VarSlot, HoleSlot>(
        std::in_place_index<2>, HoleSlot{std::move(payload)})}));
  }

  bool is_in() const noexcept { return rep_->v.index() == 0; }
  bool is_var() const noexcept { return rep_->v.index() == 1; }
  bool is_hole() const noexcept { return rep_->v.index() == 2; }

  const node_type& node() const { return std::get<0>(rep_->v); }
  const A& token() const { return std::get<1>(rep_->v).token; }
  const B& payload() const { return std::get<2>(rep_->v).payload; }

  static std::size_t allocations() { return detail::node_allocations<Cxt>(); }

 private:
  struct VarSlot {
    A token;
  };
  struct HoleSlot {
    B payload;
  };
  struct Rep {
    std::variant<node_type, VarSlot, HoleSlot> v;
  };

  explicit Cxt(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

/// Smart-constructor context handed to term builders.
template <class S, class A, HoleFlag H = NoHole, class B = Unit>
struct Ctx {
  using signature = S;
  using var_type = A;
  using cxt = Cxt<H, S, A, B>;

  template <template <class, class> class F>
    requires Subsumes<F, S>
  static cxt inject(F<A, cxt> n) {
    return cxt::in(inj<S>(std::move(n)));
  }

  static cxt hole(B payload)
    requires std::same_as<H, MayHole>
  {
    return cxt::hole(std::move(payload));
  }
};

/// In(inj(node)).
template <class C, template <class, class> class F>
  requires Subsumes<F, typename C::signature>
C inject(F<typename C::var_type, C> n) {
  return C::in(inj<typename C::signature>(std::move(n)));
}

/// Var(token).
template <class C>
C var_of(typename C::var_type token) {
  return C::var(std::move(token));
}

/// Present iff c is In(n) and n holds a G-summand.
template <template <class, class> class G, HoleFlag H, class S, class A, class B>
std::optional<G<A, Cxt<H, S, A, B>>> project_term(const Cxt<H, S, A, B>& c) {
  if (!c.is_in()) return std::nullopt;
  return proj<G>(c.node());
}

/// Merges a context whose holes carry contexts.
template <HoleFlag H, class S, class A, class B>
struct AppCxt {
  using Inner = Cxt<H, S, A, B>;
  Inner operator()(const Context<S, A, Inner>& c) const {
    if (c.is_hole()) return c.payload();
    if (c.is_var()) return Inner::var(c.token());
    return Inner::in(fmap(*this, c.node()));
  }
};

template <HoleFlag H, class S, class A, class B>
Cxt<H, S, A, B> app_cxt(const Context<S, A, Cxt<H, S, A, B>>& c) {
  return AppCxt<H, S, A, B>{}(c);
}

/// Maps every hole payload.
template <class S, class A, class B, class F>
auto map_holes(const F& f, const Context<S, A, B>& c) -> Context<S, A, mapped_t<F, B>> {
  using Out = Context<S, A, mapped_t<F, B>>;
  if (c.is_hole()) return Out::hole(f(c.payload()));
  if (c.is_var()) return Out::var(c.token());
  return Out::in(fmap([f](const Context<S, A, B>& sub) { return map_holes(f, sub); }, c.node()));
}

template <class S>
class Term;

namespace detail {
struct TermAccess {
  template <class S>
  static Term<S> make(Trm<S, Token> rep) {
    return Term<S>(std::move(rep));
  }
  template <class S>
  static const Trm<S, Token>& rep(const Term<S>& t) {
    return t.rep_;
  }
};
}  // namespace detail

/// A closed parametric term over signature S.
template <class S>
class Term {
 public:
  using signature = S;

  /// builder(Ctx<S, A>) must return Trm<S, A> for every A.
  template <class Builder>
  static Term build(Builder&& builder) {
    using Out = std::invoke_result_t<Builder&, Ctx<S, Token>>;
    static_assert(std::is_same_v<Out, Trm<S, Token>>, "term builder must return Trm<S, A>");
    return Term(std::forward<Builder>(builder)(Ctx<S, Token>{}));
  }

 private:
  explicit Term(Trm<S, Token> rep) : rep_(std::move(rep)) {}

  Trm<S, Token> rep_;

  friend struct detail::TermAccess;
};

namespace detail {

template <class S, class A>
struct Instantiate {
  Trm<S, A> operator()(const Trm<S, Token>& t) const {
    if (t.is_var()) return Trm<S, A>::var(TokenAccess::unwrap<A>(t.token()));
    return Trm<S, A>::in(dimap<A>(WrapToken<A>{}, *this, t.node()));
  }
};

}  // namespace detail

/// The preterm of t at variable type A. Binder bodies are converted lazily.
template <class A, class S>
Trm<S, A> instantiate(const Term<S>& t) {
  return detail::Instantiate<S, A>{}(detail::TermAccess::rep(t));
}

/// Counts In nodes; every binder body is entered once.
template <HoleFlag H, class S, class A, class B>
std::size_t count_nodes(const Cxt<H, S, A, B>& c, const A& binder_arg) {
  if (!c.is_in()) return 0;
  std::size_t n = 1;
  for (const auto& sub : collect_slots(c.node(), binder_arg)) n += count_nodes(sub, binder_arg);
  return n;
}

template <HoleFlag H, class S, class A, class B>
std::size_t count_holes(const Cxt<H, S, A, B>& c, const A& binder_arg) {
  if (c.is_hole()) return 1;
  if (!c.is_in()) return 0;
  std::size_t n = 0;
  for (const auto& sub : collect_slots(c.node(), binder_arg)) n += count_holes(sub, binder_arg);
  return n;
}

namespace detail {
struct Probe {};
}  // namespace detail

/// Number of In nodes of a closed term.
template <class S>
std::size_t node_count(const Term<S>& t) {
  const auto pre = instantiate<detail::Probe>(t);
  return count_nodes(pre, detail::Probe{});
}

}  // namespace pcdt
