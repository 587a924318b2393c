// Compiles as written; with PCDT_EXOTIC defined the builder tries to place a
// variable made from a concrete value, which must be rejected.
#include "pcdt/lang/signatures.hpp"

using namespace pcdt;
using namespace pcdt::lang;

int main() {
  const auto t = Term<Sig>::build([](auto c) {
    using C = typename decltype(c)::cxt;
#ifdef PCDT_EXOTIC
    return app(c, lam(c, [](C x) { return x; }), C::var(42));
#else
    return app(c, lam(c, [](C x) { return x; }), lit(c, 42));
#endif
  });
  return node_count(t) == 3 ? 0 : 1;
}
