#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

namespace pcdt {

template <class E>
struct Failure {
  E error;
};

template <class E>
Failure(E) -> Failure<E>;

inline Failure<std::string> failure(std::string message) { return {std::move(message)}; }

/// Either a value or an error. The single effect used by effectful folds and
/// by the interpreter: success(value) or failure(message).
template <class T, class E = std::string>
class Result {
 public:
  using value_type = T;
  using error_type = E;

  Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
  template <class E2>
    requires std::is_constructible_v<E, E2>
  Result(Failure<E2> f) : state_(std::in_place_index<1>, E(std::move(f.error))) {}

  bool ok() const noexcept { return state_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result::value on failure");
    return std::get<0>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result::value on failure");
    return std::get<0>(std::move(state_));
  }
  const E& error() const& {
    if (ok()) throw std::logic_error("Result::error on success");
    return std::get<1>(state_);
  }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  /// Monadic bind: f receives the value and returns a Result<U, E>.
  template <class F>
  auto and_then(F&& f) const& -> std::invoke_result_t<F, const T&> {
    if (ok()) return std::forward<F>(f)(std::get<0>(state_));
    return Failure<E>{std::get<1>(state_)};
  }

  template <class F>
  auto map(F&& f) const& -> Result<std::decay_t<std::invoke_result_t<F, const T&>>, E> {
    if (ok()) return std::forward<F>(f)(std::get<0>(state_));
    return Failure<E>{std::get<1>(state_)};
  }

 private:
  std::variant<T, E> state_;
};

template <class T>
Result<std::decay_t<T>> success(T&& value) {
  return Result<std::decay_t<T>>(std::forward<T>(value));
}

template <class T>
struct is_result : std::false_type {};
template <class T, class E>
struct is_result<Result<T, E>> : std::true_type {};

}  // namespace pcdt
