#include "pcdt/bench.hpp"

#include <chrono>
#include <memory>
#include <random>
#include <vector>

#include "json.hpp"

#include "pcdt/gen.hpp"
#include "pcdt/lang/passes.hpp"
#include "pcdt/surface.hpp"

namespace pcdt::bench {

namespace {

using Intermediate = Trm<lang::SigCore, Token>;
using Clock = std::chrono::steady_clock;

Result<lang::Value> staged(const Term<lang::Sig>& t, std::size_t& visits) {
  auto hom_count = std::make_shared<std::size_t>(0);
  auto alg_count = std::make_shared<std::size_t>(0);
  const CountingHom<lang::DesugarHom<>> rho{{}, hom_count};
  const auto desugared = app_thom(rho, t);
  auto r = cata(counting<lang::SigCore>(lang::eval_alg<lang::SigCore>(), alg_count), desugared);
  visits = *hom_count + *alg_count;
  return r;
}

Result<lang::Value> fused(const Term<lang::Sig>& t, std::size_t& visits) {
  auto count = std::make_shared<std::size_t>(0);
  auto r = cata(counting<lang::Sig>(compose_alg_hom(lang::eval_alg<lang::SigCore>(), lang::DesugarHom<>{}), count), t);
  visits = *count;
  return r;
}

bool same_result(const Result<lang::Value>& a, const Result<lang::Value>& b) {
  if (a.ok() != b.ok()) return false;
  if (!a.ok()) return a.error() == b.error();
  if (a.value().is_integer() != b.value().is_integer()) return false;
  return !a.value().is_integer() || a.value().as_integer() == b.value().as_integer();
}

}  // namespace

Measure measure(const Term<lang::Sig>& t) {
  Measure m;
  m.nodes = node_count(t);
  std::size_t before = Intermediate::allocations();
  m.staged = staged(t, m.staged_visits);
  m.staged_allocs = Intermediate::allocations() - before;
  before = Intermediate::allocations();
  m.fused = fused(t, m.fused_visits);
  m.fused_allocs = Intermediate::allocations() - before;
  return m;
}

Report run(int depth, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Term<lang::Sig>> terms;
  terms.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) terms.push_back(surface::to_term(gen::random_redex_expr(rng, depth)));

  Report r;
  r.terms = terms.size();
  for (const auto& t : terms) {
    const Measure m = measure(t);
    r.nodes += m.nodes;
    r.staged_visits += m.staged_visits;
    r.fused_visits += m.fused_visits;
    r.staged_allocs += m.staged_allocs;
    r.fused_allocs += m.fused_allocs;
    if (!same_result(m.staged, m.fused)) ++r.disagreements;
  }

  // Timing runs without the counters' bookkeeping in the measured loop.
  std::size_t sink = 0;
  auto start = Clock::now();
  for (const auto& t : terms) {
    const auto v = lang::eval_cbv(lang::desugar(t));
    sink += v.ok() ? 1 : 0;
  }
  r.staged_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  start = Clock::now();
  for (const auto& t : terms) {
    const auto v = lang::eval_fused(t);
    sink += v.ok() ? 1 : 0;
  }
  r.fused_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  (void)sink;
  return r;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["staged_visits"] = r.staged_visits;
  j["fused_visits"] = r.fused_visits;
  j["staged_ms"] = r.staged_ms;
  j["fused_ms"] = r.fused_ms;
  // dump() omits the space after ':'; write the documented layout.
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    if (!first) out += ", ";
    first = false;
    out += nlohmann::json(k).dump() + ": " + v.dump();
  }
  return out + "}";
}

}  // namespace pcdt::bench
