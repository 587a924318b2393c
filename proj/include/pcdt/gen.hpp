#pragma once

// Seeded generators of closed named expressions.
//
// Expressions are generated against a small simple-type universe so that
// evaluation always terminates. Ill-typed pieces, when enabled, are closed
// values dropped into a position of the wrong type (a literal where a
// function is expected, \z. z where an integer is expected): they make
// evaluation fail with "stuck" but can never be applied to themselves.

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>

#include "pcdt/surface.hpp"

namespace pcdt::gen {

/// Int, Int -> Int, Int -> Int -> Int, (Int -> Int) -> Int.
enum class Ty { I, II, III, HII };

std::string to_string(Ty t);
bool is_arrow(Ty t);
Ty dom(Ty t);
Ty cod(Ty t);

struct Options {
  bool allow_err = true;
  bool allow_stuck = true;
  bool allow_let = true;
};

struct TypedExpr {
  surface::ExprPtr expr;
  Ty type;
  /// The type each node was generated at (for ill-typed pieces, the type of
  /// the position they fill).
  std::shared_ptr<const std::map<const surface::Expr*, Ty>> types;
};

/// A closed expression of depth at most depth (depth >= 1).
TypedExpr random_expr(std::mt19937_64& rng, int depth, const Options& opts = {});

/// Integer-valued terms in which every lambda is applied on the spot and no
/// Err occurs: CBV evaluation enters every node exactly once. Contains at
/// least one Let whenever depth >= 2.
surface::ExprPtr random_redex_expr(std::mt19937_64& rng, int depth);

bool contains_let(const surface::Expr& e);
std::size_t expr_size(const surface::Expr& e);

}  // namespace pcdt::gen
