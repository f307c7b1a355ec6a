#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braid/rng.hpp"
#include "braid/words.hpp"
#include "helpers.hpp"

using namespace braid;
using braid::test::W;

TEST_CASE("reduce") {
  CHECK(FreeWord({1, -1}, 2).empty());
  CHECK(FreeWord({1, 2, -2, -1, 3}, 3) == W("3", 3));
  CHECK(FreeWord({1, 2, -1}, 2) == W("1 2 -1", 2));
  CHECK(FreeWord({1, 2, -1}, 2).size() == 3);
  CHECK_THROWS_AS(FreeWord({4}, 3), std::domain_error);
  CHECK_THROWS_AS(FreeWord({0}, 3), std::domain_error);
}

TEST_CASE("multiply, invert, conjugate") {
  CHECK(conjugate(W("2", 2), W("1", 2)) == W("-1 2 1", 2));
  CHECK(conjugate(W("1", 2), W("e", 2)) == W("1", 2));
  CHECK(multiply(W("1 2", 2), W("-2 -1", 2)).empty());
  CHECK_THROWS_AS(multiply(W("1", 2), W("1", 3)), std::domain_error);
}

TEST_CASE("cyclic_reduce") {
  auto r1 = cyclic_reduce(W("1 2 -1", 2));
  CHECK(r1.core == W("2", 2));
  CHECK(r1.conjugator == W("-1", 2));
  CHECK(conjugate(r1.core, r1.conjugator) == W("1 2 -1", 2));
  auto r2 = cyclic_reduce(W("1 2", 2));
  CHECK(r2.core == W("1 2", 2));
  CHECK(r2.conjugator.empty());
  auto r3 = cyclic_reduce(W("-3 -1 2 1 3", 3));
  CHECK(r3.core == W("2", 3));
  CHECK(r3.conjugator == W("1 3", 3));
  CHECK(conjugate(r3.core, r3.conjugator) == W("-3 -1 2 1 3", 3));
}

TEST_CASE("begins_with / ends_with") {
  CHECK(begins_with(W("1 2 -1", 2), W("1", 2)));
  CHECK_FALSE(begins_with(W("2", 2), W("1", 2)));
  CHECK(ends_with(W("1 2 -1", 2), W("2 -1", 2)));
}

TEST_CASE("is_squarefree") {
  CHECK_FALSE(is_squarefree(W("1 2 2 3", 3)));
  CHECK(is_squarefree(W("1 2 -1", 2)));
  CHECK(is_squarefree(W("e", 2)));
}

TEST_CASE("z1") {
  CHECK(z1(3) == W("-3 -2 -1", 3));
  CHECK(z1(1) == W("-1", 1));
  CHECK(invert(z1(2)) == W("1 2", 2));
  CHECK_THROWS_AS(z1(0), std::domain_error);
}

TEST_CASE("text format round trip") {
  CHECK(format_word(W("1 -2 -1", 2)) == "1 -2 -1");
  CHECK(format_word(FreeWord(2)) == "e");
  CHECK(parse_word("e", 3).empty());
  CHECK(parse_word("", 3).empty());
  CHECK_THROWS_AS(parse_word("1 x", 3), std::domain_error);
}

TEST_CASE("reduction is idempotent and group laws hold") {
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + rng.below(5);
    FreeWord a = random_reduced_word(rng, n, 12);
    FreeWord b = random_reduced_word(rng, n, 12);
    FreeWord c = random_reduced_word(rng, n, 12);
    CHECK(FreeWord(a.letters(), n) == a);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, invert(a)).empty());
    CHECK(multiply(a, FreeWord(n)) == a);
    CHECK((multiply(a, b).size() + a.size() + b.size()) % 2 == 0);
    auto cr = cyclic_reduce(a);
    CHECK(conjugate(cr.core, cr.conjugator) == a);
    if (!cr.core.empty())
      CHECK(cr.core.letters().front() != -cr.core.letters().back());
    CHECK(cr.core.empty() == a.empty());
    CHECK(parse_word(format_word(a), n) == a);
  }
}
