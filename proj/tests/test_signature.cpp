#include "doctest.h"
#include "support.hpp"

using namespace ts;

TEST_CASE("dimap identity and composition hold for every signature") {
  std::mt19937_64 rng(seed);
  CHECK(difunctor_laws<Lam>(rng));
  CHECK(difunctor_laws<App>(rng));
  CHECK(difunctor_laws<Lit>(rng));
  CHECK(difunctor_laws<Plus>(rng));
  CHECK(difunctor_laws<Err>(rng));
  CHECK(difunctor_laws<Let>(rng));
}

TEST_CASE("a broken dimap is caught by the node comparison") {
  // Guard for the law check itself: a slot perturbed at one sampled argument
  // must be reported as a different node.
  const Lam<int, long> a{[](int x) { return static_cast<long>(x); }};
  const Lam<int, long> b{[](int x) { return x == 13 ? 0L : static_cast<long>(x); }};
  CHECK_FALSE(same_node(a, b));
  CHECK_FALSE(same_node(inj<Sig>(Lit<int, long>{1}), inj<Sig>(Lit<int, long>{2})));
  CHECK_FALSE(same_node(inj<Sig>(Lit<int, long>{1}), inj<Sig>(Err<int, long>{})));
}

TEST_CASE("proj after inj recovers the node and rejects every other summand") {
  std::mt19937_64 rng(seed);
  CHECK(proj_inj_round_trips(rng));
}

TEST_CASE("inj of Lit 5 into the core signature takes the path Inr Inr Inl") {
  const auto n = inj<SigCore>(Lit<int, long>{5});
  REQUIRE_FALSE(n.is_left());
  REQUIRE_FALSE(n.right().is_left());
  REQUIRE(n.right().right().is_left());
  CHECK(n.right().right().left().value == 5);
  CHECK(summand_index(n) == 2);
}

TEST_CASE("fmap maps covariant slots and post-composes binder bodies") {
  const auto n = inj<Sig>(Let<int, long>{10, [](int x) { return static_cast<long>(x) * 2; }});
  const auto m = fmap([](long b) { return b + 1; }, n);
  const auto let = proj<Let>(m);
  REQUIRE(let.has_value());
  CHECK(let->bound == 11);
  CHECK(let->body(4) == 9);
}

TEST_CASE("dimap pre-composes binder bodies") {
  const Lam<int, long> n{[](int x) { return static_cast<long>(x) * 10; }};
  const auto m = dimap<std::string>([](const std::string& s) { return static_cast<int>(s.size()); },
                                    std::identity{}, n);
  CHECK(m.body("abc") == 30);
}

TEST_CASE("disequence sequences left to right and stops at the first failure") {
  using R = Result<int>;
  const auto lit = disequence(Lit<int, R>{7});
  REQUIRE(lit.ok());
  CHECK(lit.value().value == 7);

  const auto both = disequence(Plus<int, R>{R(1), R(2)});
  REQUIRE(both.ok());
  CHECK(both.value().lhs == 1);
  CHECK(both.value().rhs == 2);

  const auto right = disequence(Plus<int, R>{R(1), R(failure("e"))});
  REQUIRE_FALSE(right.ok());
  CHECK(right.error() == "e");

  const auto left_first = disequence(Plus<int, R>{R(failure("a")), R(failure("b"))});
  REQUIRE_FALSE(left_first.ok());
  CHECK(left_first.error() == "a");

  const auto app = disequence(inj<Signature<App, Lit, Plus, Err>>(App<int, R>{R(3), R(4)}));
  REQUIRE(app.ok());
  CHECK(proj<App>(app.value())->arg == 4);
}

TEST_CASE("disequence on all-successful nodes keeps every slot") {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int i = 0; i < cases; ++i) {
    const int a = d(rng);
    const int b = d(rng);
    const auto r = disequence(inj<Signature<App, Plus, Lit, Err>>(Plus<int, Result<int>>{a, b}));
    REQUIRE(r.ok());
    CHECK(proj<Plus>(r.value())->lhs == a);
    CHECK(proj<Plus>(r.value())->rhs == b);
  }
}

// Subsumption and traversability are static facts.
static_assert(Subsumes<Lit, SigCore>);
static_assert(Subsumes<Let, Sig>);
static_assert(!Subsumes<Let, SigCore>);
static_assert(!Subsumes<Lit, Signature<Lit, Plus, Lit>>, "ambiguous summands are rejected");
static_assert(Ditraversable<Signature<App, Lit, Plus, Err>>);
static_assert(!Ditraversable<SigCore>, "Lam has a contravariant slot");
static_assert(!Ditraversable<Sig>);

template <class S>
concept CanInjLit = requires(Lit<int, long> n) { inj<S>(n); };
static_assert(CanInjLit<Sig>);
static_assert(!CanInjLit<Signature<Lit, Lit>>);
static_assert(!CanInjLit<Signature<App, Plus>>);

TEST_CASE("summand_index follows declaration order") {
  CHECK(summand_index(inj<Sig>(Lam<int, long>{})) == 0);
  CHECK(summand_index(inj<Sig>(App<int, long>{})) == 1);
  CHECK(summand_index(inj<Sig>(Lit<int, long>{})) == 2);
  CHECK(summand_index(inj<Sig>(Plus<int, long>{})) == 3);
  CHECK(summand_index(inj<Sig>(Err<int, long>{})) == 4);
  CHECK(summand_index(inj<Sig>(Let<int, long>{})) == 5);
}
