// pcdt: command-line driver over the C interface.
//
// Exit codes: 0 success, 1 evaluation failure, 2 parse error, 64 bad usage,
// 70 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pcdt/pcdt.h"

namespace {

constexpr int exit_usage = 64;
constexpr int exit_internal = 70;

struct InputError {
  std::string message;
};

// "-" reads standard input; with --file the argument names a file.
std::string read_input(const std::string& arg, bool from_file) {
  if (arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  if (!from_file) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw InputError{"cannot open '" + arg + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { pcdt_term_free(t_); }
  pcdt_term** out() { return &t_; }
  const pcdt_term* get() const { return t_; }

 private:
  pcdt_term* t_ = nullptr;
};

int status_exit(pcdt_status s) {
  switch (s) {
    case PCDT_OK: return 0;
    case PCDT_EVAL_FAILURE: return 1;
    case PCDT_PARSE_ERROR: return 2;
    case PCDT_INVALID_ARGUMENT: return exit_usage;
    case PCDT_INTERNAL_ERROR: break;
  }
  return exit_internal;
}

// Reports a failed call and returns its exit code.
int report(pcdt_status s) {
  if (s == PCDT_PARSE_ERROR) {
    std::cerr << "parse error at " << pcdt_last_error() << "\n";
  } else {
    std::cerr << "pcdt: " << pcdt_last_error() << "\n";
  }
  return status_exit(s);
}

int parse_into(const std::string& text, Handle& h) {
  const pcdt_status s = pcdt_parse(text.data(), text.size(), h.out());
  return s == PCDT_OK ? 0 : report(s);
}

// Prints a string result, freeing it.
int print_owned(pcdt_status s, char* str) {
  if (s != PCDT_OK && s != PCDT_EVAL_FAILURE) return report(s);
  std::cout << str << "\n";
  pcdt_string_free(str);
  return status_exit(s);
}

int render(const pcdt_term* t, pcdt_status (*fn)(const pcdt_term*, char**)) {
  char* out = nullptr;
  const pcdt_status s = fn(t, &out);
  return print_owned(s, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric compositional data types: a small lambda language and its passes"};
  app.require_subcommand(1);

  bool from_file = false;
  app.add_flag("-f,--file", from_file, "Treat EXPR arguments as file paths");

  std::string expr;
  std::string expr2;

  auto* pretty = app.add_subcommand("pretty", "Print the fully parenthesized form");
  pretty->add_option("EXPR", expr, "Expression, or - for stdin")->required();

  bool fold = false;
  auto* desugar = app.add_subcommand("desugar", "Rewrite let into an applied lambda and print");
  desugar->add_flag("--fold", fold, "Constant-fold after desugaring");
  desugar->add_option("EXPR", expr, "Expression, or - for stdin")->required();

  auto* constfold = app.add_subcommand("constfold", "Fold literal sums and print");
  constfold->add_option("EXPR", expr, "Expression, or - for stdin")->required();

  bool fused = false;
  auto* eval = app.add_subcommand("eval", "Evaluate call-by-value");
  eval->add_flag("--fused", fused, "Desugar and evaluate in a single traversal");
  eval->add_option("EXPR", expr, "Expression, or - for stdin")->required();

  auto* show = app.add_subcommand("show", "Print the constructor form");
  show->add_option("EXPR", expr, "Expression, or - for stdin")->required();

  auto* eq = app.add_subcommand("eq", "Compare two expressions up to renaming of bound variables");
  eq->add_option("EXPR1", expr, "First expression")->required();
  eq->add_option("EXPR2", expr2, "Second expression")->required();

  int depth = 6;
  int count = 100;
  std::uint64_t seed = 42;
  auto* bench = app.add_subcommand("bench", "Compare staged and fused evaluation on random terms");
  bench->add_option("--depth", depth, "Maximum term depth")->check(CLI::Range(1, 20));
  bench->add_option("--count", count, "Number of terms")->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", seed, "Random seed");

  auto* typed_demo = app.add_subcommand("typed-demo", "Run the typed core demonstration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (bench->parsed()) {
      char* out = nullptr;
      const pcdt_status s = pcdt_bench(depth, count, seed, &out);
      return print_owned(s, out);
    }
    if (typed_demo->parsed()) {
      char* out = nullptr;
      const pcdt_status s = pcdt_typed_demo(&out);
      if (s != PCDT_OK) return report(s);
      std::cout << out;
      pcdt_string_free(out);
      return 0;
    }

    Handle term;
    if (const int rc = parse_into(read_input(expr, from_file), term); rc != 0) return rc;

    if (pretty->parsed()) return render(term.get(), pcdt_pretty);
    if (show->parsed()) return render(term.get(), pcdt_show);
    if (desugar->parsed() || constfold->parsed()) {
      Handle result;
      const pcdt_status s = desugar->parsed() ? pcdt_desugar(term.get(), fold ? 1 : 0, result.out())
                                              : pcdt_constfold(term.get(), result.out());
      if (s != PCDT_OK) return report(s);
      return render(result.get(), pcdt_pretty);
    }
    if (eval->parsed()) {
      char* out = nullptr;
      const pcdt_status s = pcdt_eval(term.get(), fused ? 1 : 0, &out);
      return print_owned(s, out);
    }
    if (eq->parsed()) {
      Handle other;
      if (const int rc = parse_into(read_input(expr2, from_file), other); rc != 0) return rc;
      int equal = 0;
      const pcdt_status s = pcdt_alpha_eq(term.get(), other.get(), &equal);
      if (s != PCDT_OK) return report(s);
      std::cout << (equal != 0 ? "equal" : "not equal") << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "pcdt: " << e.message << "\n";
    return exit_usage;
  }
  return exit_usage;
}
