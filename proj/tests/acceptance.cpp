// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "exotic_checks.hpp"
#include "pcdt/bench.hpp"
#include "pcdt/typed.hpp"
#include "support.hpp"

using namespace ts;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << n << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

Term<Sig> parsed(const std::string& s) { return surface::parse(s).value(); }

bool criterion1() { return pretty(running_example()) == "(let x1 = 2 in ((\\x2. (x2 + x1)) 3))"; }

bool criterion2() {
  const auto five = eval_cbv(desugar(running_example()));
  const auto err = eval_cbv(desugar(parsed("0 + error")));
  const auto stuck = eval_cbv(desugar(parsed("0 + (\\x. x)")));
  return five.ok() && five.value().is_integer() && five.value().as_integer() == 5 && !err.ok() &&
         err.error() == "error" && !stuck.ok() && stuck.error() == "stuck";
}

bool criterion3() {
  return struct_show(running_example()) == "Let (Lit 2) (\\a -> App (Lam (\\b -> Plus b a)) (Lit 3))";
}

bool criterion4(std::string& detail) {
  using namespace pcdt::typed;
  const auto t = TypedTerm<TInt>::build([](auto c) {
    return pcdt::typed::app(c, pcdt::typed::lam<TInt>(c, [c](auto x) { return pcdt::typed::plus(c, x, x); }),
                            pcdt::typed::lit(c, 2));
  });
  const auto r = typed_eval(t);
  const bool four = r.ok() && r.value() == 4;

  std::mt19937_64 rng(seed);
  gen::Options opts;
  opts.allow_err = false;
  opts.allow_stuck = false;
  opts.allow_let = false;
  int failed = 0;
  for (int i = 0; i < 100; ++i) {
    const auto term = reify(gen::random_expr(rng, 6, opts));
    std::visit([&](const auto& x) { failed += typed_eval(x).ok() ? 0 : 1; }, term);
  }
  detail = "typed eval " + (r.ok() ? std::to_string(r.value()) : r.error()) + ", " + std::to_string(failed) +
           " failures in 100 Err-free terms";
  return four && failed == 0;
}

bool criterion5(std::string& detail) {
  std::mt19937_64 rng(seed);
  const bool difunctor = all_difunctor_laws(rng);
  const bool proj_inj = proj_inj_round_trips(rng);
  const auto corpus = random_corpus(cases);
  const bool hom = all_hom_fusion(corpus.terms);
  const bool alg = all_alg_fusion(corpus.terms);
  const bool desugar_forms = desugar_forms_agree(corpus.terms);
  detail = std::string("difunctor ") + (difunctor ? "ok" : "broken") + ", proj/inj " + (proj_inj ? "ok" : "broken") +
           ", hom fusion " + (hom ? "ok" : "broken") + ", algebra fusion " + (alg ? "ok" : "broken") +
           ", desugar forms " + (desugar_forms ? "ok" : "broken");
  return difunctor && proj_inj && hom && alg && desugar_forms;
}

bool criterion6(std::string& detail) {
  const auto corpus = random_corpus(cases);
  bool laws = true;
  bool show_invariant = true;
  bool round_trip = true;
  for (std::size_t i = 0; i < corpus.terms.size(); ++i) {
    const auto& t = corpus.terms[i];
    const auto u = alpha_variant(corpus.exprs[i], "_1");
    const auto v = alpha_variant(corpus.exprs[i], "_2");
    const auto& other = corpus.terms[(i + 1) % corpus.terms.size()];
    laws = laws && alpha_eq(t, t) && alpha_eq(t, u) && alpha_eq(u, t) && alpha_eq(u, v) && alpha_eq(t, v) &&
           alpha_eq(t, other) == alpha_eq(other, t);
    show_invariant = show_invariant && struct_show(t) == struct_show(u) && struct_show(t) == struct_show(v);
    const auto back = surface::parse(pretty(t));
    round_trip = round_trip && back.ok() && alpha_eq(back.value(), t);
  }
  const bool examples =
      alpha_eq(parsed("\\x. x"), parsed("\\y. y")) && !alpha_eq(parsed("\\x. \\y. x"), parsed("\\x. \\y. y"));
  detail = std::string("laws ") + (laws ? "ok" : "broken") + ", examples " + (examples ? "ok" : "broken") +
           ", show invariance " + (show_invariant ? "ok" : "broken") + ", parse . pretty " +
           (round_trip ? "ok" : "broken");
  return laws && examples && show_invariant && round_trip;
}

bool criterion7(std::string& detail) {
  const auto ann = annotated_corpus(random_corpus(cases));
  const bool commutes = annotation_commutes(ann);
  const bool positions = annotation_propagates(ann);
  detail = std::string("strip/lift ") + (commutes ? "ok" : "broken") + ", Let positions " +
           (positions ? "ok" : "broken");
  return commutes && positions;
}

bool criterion8(std::string& detail) {
  std::mt19937_64 rng(seed);
  bool ok = true;
  std::size_t staged = 0;
  std::size_t fused = 0;
  for (int i = 0; i < 100; ++i) {
    const auto e = gen::random_redex_expr(rng, 6);
    const auto m = bench::measure(surface::to_term(e));
    ok = ok && gen::contains_let(*e) && m.fused_visits < m.staged_visits && m.fused_visits == m.nodes &&
         m.nodes == gen::expr_size(*e);
    staged += m.staged_visits;
    fused += m.fused_visits;
  }
  const auto timing = bench::run(6, 100, seed);
  char speed[64];
  std::snprintf(speed, sizeof speed, "%.2f", timing.fused_ms > 0 ? timing.staged_ms / timing.fused_ms : 0.0);
  detail = "visits staged " + std::to_string(staged) + ", fused " + std::to_string(fused) + "; speedup " + speed +
           "x (reported only)";
  return ok;
}

// Compiles each exotic-term file twice: as written (must succeed) and with
// the exotic construction enabled (must fail).
bool compiles(const std::string& file, bool exotic) {
  const std::string cmd = std::string("\"") + PCDT_CXX + "\" -std=c++20 -fsyntax-only -I\"" + PCDT_INCLUDE_DIR + "\" " +
                          (exotic ? "-DPCDT_EXOTIC " : "") + "\"" + PCDT_EXOTIC_DIR + "/" + file +
                          "\" >/dev/null 2>&1";
  return std::system(cmd.c_str()) == 0;
}

bool criterion9(std::string& detail) {
  const bool statics = exotic::no_place && exotic::no_cata && exotic::no_case;
  bool files = true;
  for (const char* f : {"bad_place.cpp", "bad_cata.cpp", "bad_case.cpp"}) {
    const bool control = compiles(f, false);
    const bool rejected = !compiles(f, true);
    files = files && control && rejected;
    detail += std::string(detail.empty() ? "" : ", ") + f + (control && rejected ? " rejected" : " NOT rejected");
  }
  return statics && files;
}

}  // namespace

int main() {
  std::string d;
  report(1, "pretty of the running example", criterion1());
  report(2, "golden evaluation results", criterion2());
  report(3, "structural show of the running example", criterion3());
  report(4, "typed core", criterion4(d), d);
  d.clear();
  report(5, "law suite (seed 42, 200 cases)", criterion5(d), d);
  d.clear();
  report(6, "alpha-equivalence suite", criterion6(d), d);
  d.clear();
  report(7, "annotation propagation", criterion7(d), d);
  d.clear();
  report(8, "deforestation on 100 depth-6 terms with Let", criterion8(d), d);
  d.clear();
  report(9, "exotic terms are unconstructible", criterion9(d), d);
  return failures;
}
