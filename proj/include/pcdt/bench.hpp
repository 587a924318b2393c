#pragma once

// Staged (desugar, then evaluate) versus fused (one traversal with the
// composed algebra) evaluation, with visit counters supplied by counting
// adapters and intermediate-term allocation counts.

#include <cstddef>
#include <cstdint>
#include <string>

#include "pcdt/lang/signatures.hpp"
#include "pcdt/lang/value.hpp"
#include "pcdt/term.hpp"

namespace pcdt::bench {

struct Measure {
  std::size_t nodes = 0;          // In nodes of the input term
  std::size_t staged_visits = 0;  // homomorphism applications plus algebra applications
  std::size_t fused_visits = 0;   // applications of the composed algebra
  std::size_t staged_allocs = 0;  // nodes of the desugared intermediate term
  std::size_t fused_allocs = 0;
  Result<lang::Value> staged = failure("not run");
  Result<lang::Value> fused = failure("not run");
};

Measure measure(const Term<lang::Sig>& t);

struct Report {
  std::size_t terms = 0;
  std::size_t nodes = 0;
  std::size_t staged_visits = 0;
  std::size_t fused_visits = 0;
  double staged_ms = 0;
  double fused_ms = 0;
  std::size_t staged_allocs = 0;
  std::size_t fused_allocs = 0;
  std::size_t disagreements = 0;
};

/// count random redex terms of depth at most depth, from seed.
Report run(int depth, int count, std::uint64_t seed);

/// {"staged_visits": a, "fused_visits": b, "staged_ms": x, "fused_ms": y}
std::string to_json(const Report& r);

}  // namespace pcdt::bench
