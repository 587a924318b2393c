#pragma once

// The interpreter's semantic domain: integers and fallible functions.

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "pcdt/result.hpp"

namespace pcdt::lang {

using Int = std::int64_t;

/// Two's-complement addition; overflow wraps instead of being undefined.
inline Int wrapping_add(Int a, Int b) noexcept {
  return static_cast<Int>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

class Value;

using FunV = std::function<Result<Value>(const Value&)>;

class Value {
 public:
  static Value integer(Int n) { return Value(n); }
  static Value function(FunV f) { return Value(std::make_shared<const FunV>(std::move(f))); }

  bool is_integer() const noexcept { return v_.index() == 0; }
  bool is_function() const noexcept { return v_.index() == 1; }

  Int as_integer() const {
    if (!is_integer()) throw std::logic_error("Value::as_integer on a function");
    return std::get<0>(v_);
  }
  const FunV& as_function() const {
    if (!is_function()) throw std::logic_error("Value::as_function on an integer");
    return *std::get<1>(v_);
  }

 private:
  explicit Value(Int n) : v_(std::in_place_index<0>, n) {}
  explicit Value(std::shared_ptr<const FunV> f) : v_(std::in_place_index<1>, std::move(f)) {}

  std::variant<Int, std::shared_ptr<const FunV>> v_;
};

/// CLI rendering: "Int <n>", "<fun>" or "error: <msg>".
inline std::string render_result(const Result<Value>& r) {
  if (!r.ok()) return "error: " + r.error();
  if (r.value().is_integer()) return "Int " + std::to_string(r.value().as_integer());
  return "<fun>";
}

}  // namespace pcdt::lang
