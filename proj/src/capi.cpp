#include "pcdt/pcdt.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>
#include <variant>

#include "pcdt/bench.hpp"
#include "pcdt/lang/passes.hpp"
#include "pcdt/names.hpp"
#include "pcdt/surface.hpp"
#include "pcdt/typed.hpp"

struct pcdt_term {
  std::variant<pcdt::Term<pcdt::lang::Sig>, pcdt::Term<pcdt::lang::SigCore>> term;
};

namespace {

using pcdt::Term;
using pcdt::lang::Sig;
using pcdt::lang::SigCore;

thread_local std::string last_error;

pcdt_status fail(pcdt_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

pcdt_status ok() {
  last_error.clear();
  return PCDT_OK;
}

pcdt_status emit(const std::string& s, char** out) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) return fail(PCDT_INTERNAL_ERROR, "out of memory");
  std::memcpy(p, s.c_str(), s.size() + 1);
  *out = p;
  return ok();
}

// Runs body, translating exceptions into status codes.
template <class F>
pcdt_status guarded(F&& body) {
  try {
    return body();
  } catch (const std::bad_alloc&) {
    return fail(PCDT_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PCDT_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(PCDT_INTERNAL_ERROR, "unknown error");
  }
}

Term<Sig> as_full(const pcdt_term& t) {
  return std::visit(
      [](const auto& term) -> Term<Sig> {
        using T = std::decay_t<decltype(term)>;
        if constexpr (std::is_same_v<T, Term<Sig>>) {
          return term;
        } else {
          return pcdt::embed_term<Sig>(term);
        }
      },
      t.term);
}

}  // namespace

extern "C" {

const char* pcdt_version(void) { return "0.1.0"; }

const char* pcdt_last_error(void) { return last_error.c_str(); }

pcdt_status pcdt_parse(const char* text, size_t length, pcdt_term** out) {
  if ((text == nullptr && length != 0) || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto r = pcdt::surface::parse(std::string_view(text == nullptr ? "" : text, length));
    if (!r) return fail(PCDT_PARSE_ERROR, pcdt::surface::to_string(r.error()));
    *out = new pcdt_term{r.value()};
    return ok();
  });
}

void pcdt_term_free(pcdt_term* term) { delete term; }

pcdt_status pcdt_pretty(const pcdt_term* term, char** out) {
  if (term == nullptr || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(std::visit([](const auto& t) { return pcdt::lang::pretty(t); }, term->term), out);
  });
}

pcdt_status pcdt_show(const pcdt_term* term, char** out) {
  if (term == nullptr || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(std::visit([](const auto& t) { return pcdt::struct_show(t); }, term->term), out);
  });
}

pcdt_status pcdt_node_count(const pcdt_term* term, size_t* out) {
  if (term == nullptr || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = std::visit([](const auto& t) { return pcdt::node_count(t); }, term->term);
    return ok();
  });
}

pcdt_status pcdt_desugar(const pcdt_term* term, int fold, pcdt_term** out) {
  if (term == nullptr || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Term<SigCore> d = pcdt::lang::desugar(as_full(*term));
    if (fold != 0) d = pcdt::lang::const_fold(d);
    *out = new pcdt_term{std::move(d)};
    return ok();
  });
}

pcdt_status pcdt_constfold(const pcdt_term* term, pcdt_term** out) {
  if (term == nullptr || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pcdt_term{std::visit(
        [](const auto& t) -> decltype(pcdt_term::term) { return pcdt::lang::const_fold(t); }, term->term)};
    return ok();
  });
}

pcdt_status pcdt_eval(const pcdt_term* term, int fused, char** out) {
  if (term == nullptr || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = std::visit(
        [fused](const auto& t) {
          if (fused != 0) return pcdt::lang::eval_fused(t);
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, Term<Sig>>) {
            return pcdt::lang::eval_cbv(pcdt::lang::desugar(t));
          } else {
            return pcdt::lang::eval_cbv(t);
          }
        },
        term->term);
    const pcdt_status s = emit(pcdt::lang::render_result(r), out);
    if (s != PCDT_OK) return s;
    if (!r.ok()) return fail(PCDT_EVAL_FAILURE, r.error());
    return ok();
  });
}

pcdt_status pcdt_alpha_eq(const pcdt_term* a, const pcdt_term* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = pcdt::alpha_eq(as_full(*a), as_full(*b)) ? 1 : 0;
    return ok();
  });
}

pcdt_status pcdt_bench(int depth, int count, uint64_t seed, char** out) {
  if (out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  if (depth < 1 || count < 0) return fail(PCDT_INVALID_ARGUMENT, "depth must be >= 1 and count >= 0");
  return guarded([&] { return emit(pcdt::bench::to_json(pcdt::bench::run(depth, count, seed)), out); });
}

pcdt_status pcdt_typed_demo(char** out) {
  if (out == nullptr) return fail(PCDT_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(pcdt::typed::typed_demo(), out); });
}

void pcdt_string_free(char* s) { std::free(s); }

}  // extern "C"
