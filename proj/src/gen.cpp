#include "pcdt/gen.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcdt::gen {

using surface::Expr;
using surface::ExprPtr;

std::string to_string(Ty t) {
  switch (t) {
    case Ty::I: return "Int";
    case Ty::II: return "Int -> Int";
    case Ty::III: return "Int -> Int -> Int";
    case Ty::HII: return "(Int -> Int) -> Int";
  }
  return {};
}

bool is_arrow(Ty t) { return t != Ty::I; }

Ty dom(Ty t) {
  switch (t) {
    case Ty::II:
    case Ty::III: return Ty::I;
    case Ty::HII: return Ty::II;
    case Ty::I: break;
  }
  throw std::invalid_argument("dom of Int");
}

Ty cod(Ty t) {
  switch (t) {
    case Ty::II:
    case Ty::HII: return Ty::I;
    case Ty::III: return Ty::II;
    case Ty::I: break;
  }
  throw std::invalid_argument("cod of Int");
}

namespace {

constexpr std::array<Ty, 4> all_types{Ty::I, Ty::II, Ty::III, Ty::HII};
constexpr std::array<const char*, 6> name_pool{"x", "y", "z", "f", "g", "h"};

// Smallest depth at which a closed, well-typed term of t exists.
int min_depth(Ty t) {
  switch (t) {
    case Ty::I: return 1;
    case Ty::II:
    case Ty::HII: return 2;
    case Ty::III: return 3;
  }
  return 1;
}

// The arrow type dom -> t, when the universe has it.
std::optional<Ty> arrow_to(Ty d, Ty t) {
  for (Ty a : all_types) {
    if (is_arrow(a) && dom(a) == d && cod(a) == t) return a;
  }
  return std::nullopt;
}

struct Binding {
  std::string name;
  Ty type;
};

class Generator {
 public:
  Generator(std::mt19937_64& rng, Options opts) : rng_(rng), opts_(opts) {}

  ExprPtr gen(Ty t, int depth) {
    ExprPtr e = gen_node(t, depth);
    types_->emplace(e.get(), t);
    return e;
  }

  std::shared_ptr<std::map<const Expr*, Ty>> types() const { return types_; }

 private:
  ExprPtr gen_node(Ty t, int depth) {
    enum class Choice { Var, Lit, Plus, Lam, App, Let, Err, Stuck };
    std::vector<std::pair<Choice, int>> options;
    const auto vars = visible(t);
    if (!vars.empty()) options.emplace_back(Choice::Var, 3);
    if (t == Ty::I) options.emplace_back(Choice::Lit, 2);
    if (t == Ty::I && depth >= 2) options.emplace_back(Choice::Plus, 3);
    if (is_arrow(t) && depth >= min_depth(t)) options.emplace_back(Choice::Lam, 3);
    if (depth >= 2 && !app_arg_types(t, depth - 1).empty()) options.emplace_back(Choice::App, 3);
    if (opts_.allow_let && depth >= 2 && depth - 1 >= min_depth(t)) options.emplace_back(Choice::Let, 2);
    if (opts_.allow_err) options.emplace_back(Choice::Err, 1);
    if (opts_.allow_stuck && (is_arrow(t) || depth >= 2)) options.emplace_back(Choice::Stuck, 1);
    if (options.empty()) throw std::logic_error("no term of type " + to_string(t) + " at this depth");

    int total = 0;
    for (const auto& o : options) total += o.second;
    int pick = std::uniform_int_distribution<int>(0, total - 1)(rng_);
    Choice c = options.front().first;
    for (const auto& o : options) {
      if (pick < o.second) {
        c = o.first;
        break;
      }
      pick -= o.second;
    }

    switch (c) {
      case Choice::Var:
        return surface::var_expr(vars[uniform(vars.size())]);
      case Choice::Lit:
        return surface::lit_expr(literal());
      case Choice::Plus: {
        ExprPtr l = gen(Ty::I, depth - 1);
        return surface::plus_expr(std::move(l), gen(Ty::I, depth - 1));
      }
      case Choice::Lam: {
        const std::string x = fresh_name();
        scope_.push_back({x, dom(t)});
        ExprPtr body = gen(cod(t), depth - 1);
        scope_.pop_back();
        return surface::lam_expr(x, std::move(body));
      }
      case Choice::App: {
        const auto args = app_arg_types(t, depth - 1);
        const Ty a = args[uniform(args.size())];
        ExprPtr f = gen(*arrow_to(a, t), depth - 1);
        return surface::app_expr(std::move(f), gen(a, depth - 1));
      }
      case Choice::Let: {
        std::vector<Ty> bounds;
        for (Ty b : all_types) {
          if (depth - 1 >= min_depth(b) || !visible(b).empty()) bounds.push_back(b);
        }
        const Ty b = bounds[uniform(bounds.size())];
        ExprPtr bound = gen(b, depth - 1);
        const std::string x = fresh_name();
        scope_.push_back({x, b});
        ExprPtr body = gen(t, depth - 1);
        scope_.pop_back();
        return surface::let_expr(x, std::move(bound), std::move(body));
      }
      case Choice::Err:
        return surface::err_expr();
      case Choice::Stuck:
        if (is_arrow(t)) return surface::lit_expr(literal());
        return surface::lam_expr("z", surface::var_expr("z"));
    }
    throw std::logic_error("unreachable");
  }

  std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  lang::Int literal() { return static_cast<lang::Int>(uniform(10)); }

  std::string fresh_name() { return name_pool[uniform(name_pool.size())]; }

  // Names of in-scope, unshadowed bindings of type t.
  std::vector<std::string> visible(Ty t) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scope_.size(); ++i) {
      if (scope_[i].type != t) continue;
      bool shadowed = false;
      for (std::size_t j = i + 1; j < scope_.size(); ++j) shadowed = shadowed || scope_[j].name == scope_[i].name;
      if (!shadowed) out.push_back(scope_[i].name);
    }
    return out;
  }

  bool reachable(Ty t, int depth) const { return depth >= min_depth(t) || !visible(t).empty(); }

  std::vector<Ty> app_arg_types(Ty t, int depth) const {
    std::vector<Ty> out;
    for (Ty a : all_types) {
      const auto f = arrow_to(a, t);
      if (f && reachable(*f, depth) && reachable(a, depth)) out.push_back(a);
    }
    return out;
  }

  std::mt19937_64& rng_;
  Options opts_;
  std::vector<Binding> scope_;
  std::shared_ptr<std::map<const Expr*, Ty>> types_ = std::make_shared<std::map<const Expr*, Ty>>();
};

ExprPtr redex(std::mt19937_64& rng, int depth, std::vector<std::string>& scope, int& fresh) {
  auto uniform = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const auto lit = [&] { return surface::lit_expr(static_cast<lang::Int>(uniform(10))); };
  if (depth <= 1) {
    if (!scope.empty() && uniform(2) == 0) return surface::var_expr(scope[uniform(scope.size())]);
    return lit();
  }
  // 0 leaf, 1 plus, 2 let, 3 applied lambda
  const std::size_t kinds = depth >= 3 ? 4 : 3;
  switch (uniform(kinds)) {
    case 0:
      if (!scope.empty() && uniform(2) == 0) return surface::var_expr(scope[uniform(scope.size())]);
      return lit();
    case 1: {
      ExprPtr l = redex(rng, depth - 1, scope, fresh);
      return surface::plus_expr(std::move(l), redex(rng, depth - 1, scope, fresh));
    }
    case 2: {
      ExprPtr bound = redex(rng, depth - 1, scope, fresh);
      const std::string x = "v" + std::to_string(fresh++);
      scope.push_back(x);
      ExprPtr body = redex(rng, depth - 1, scope, fresh);
      scope.pop_back();
      return surface::let_expr(x, std::move(bound), std::move(body));
    }
    default: {
      const std::string x = "v" + std::to_string(fresh++);
      scope.push_back(x);
      ExprPtr body = redex(rng, depth - 2, scope, fresh);
      scope.pop_back();
      ExprPtr arg = redex(rng, depth - 1, scope, fresh);
      return surface::app_expr(surface::lam_expr(x, std::move(body)), std::move(arg));
    }
  }
}

}  // namespace

TypedExpr random_expr(std::mt19937_64& rng, int depth, const Options& opts) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  std::vector<Ty> types;
  for (Ty t : all_types) {
    if (depth >= min_depth(t)) types.push_back(t);
  }
  const Ty t = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
  Generator g(rng, opts);
  ExprPtr e = g.gen(t, depth);
  return {std::move(e), t, g.types()};
}

ExprPtr random_redex_expr(std::mt19937_64& rng, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::string> scope;
    int fresh = 0;
    ExprPtr e = redex(rng, depth, scope, fresh);
    if (depth < 2 || contains_let(*e)) return e;
  }
  // Vanishingly unlikely: fall back to a Let at the root.
  return surface::let_expr("v0", surface::lit_expr(1), surface::var_expr("v0"));
}

bool contains_let(const Expr& e) {
  if (e.kind == Expr::Kind::Let) return true;
  return (e.a && contains_let(*e.a)) || (e.b && contains_let(*e.b));
}

std::size_t expr_size(const Expr& e) {
  if (e.kind == Expr::Kind::Var) return 0;
  return 1 + (e.a ? expr_size(*e.a) : 0) + (e.b ? expr_size(*e.b) : 0);
}

}  // namespace pcdt::gen
