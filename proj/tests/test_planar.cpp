#include <doctest.h>

#include "braid/planar.hpp"
#include "braid/rng.hpp"
#include "helpers.hpp"

using namespace braid;
using braid::test::B;
using braid::test::W;

namespace {

// every reduced word of length <= max_len over rank n
std::vector<FreeWord> all_reduced_words(int n, int max_len) {
  std::vector<FreeWord> out{FreeWord(n)};
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= n; ++i) {
        for (Letter a : {i, -i}) {
          if (!w.empty() && w.back() == -a) continue;
          auto ext = w;
          ext.push_back(a);
          out.emplace_back(ext, n);
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("whitehead expansion") {
  // t_1 t_2 t_1^-1 -> (z1bar, t1, t1bar, t2, t2bar, t1bar, t1, z1)
  FreeWord w = W("1 2 -1", 2);
  std::vector<int> exp = whitehead_expansion(w);
  CHECK(exp == std::vector<int>{0, 1, 2, 3, 4, 2, 1, 5});
  CHECK(whitehead_expansion(FreeWord(2)) == std::vector<int>{0, 5});
  CHECK(whitehead_expansion(W("3", 3)) == std::vector<int>{0, 5, 6, 7});
}

TEST_CASE("paper ground-truth planarity") {
  CHECK(is_planar(W("1 2 -1", 2)).has_value());
  // the conjugate with the inverted middle letter leaves every
  // representative orbit (its cyclic core is an inverse generator)
  CHECK_FALSE(is_planar(W("1 -2 -1", 2)).has_value());
  CHECK_FALSE(is_planar(W("1 -2", 2)).has_value());
  CHECK_FALSE(is_planar(W("1 1", 2)).has_value());
  CHECK(is_planar(conjugate(W("3", 3), W("1 -2 -1", 3))).has_value());
  CHECK_FALSE(is_planar(conjugate(W("3", 3), W("1 2 -1", 3))).has_value());
}

TEST_CASE("embedding of the xy1 example") {
  auto emb = is_planar(W("1 2 -1", 2));
  REQUIRE(emb.has_value());
  CHECK(emb->labels == std::vector<int>{0, 1, 1, 2, 2, 3, 4, 5});
  CHECK(emb->upper.size() == 4);
  CHECK(emb->lower.size() == 3);
  // the reference layout's permutation (3,5,7)(4,6) in one-line form
  CHECK(emb->pi == std::vector<int>{1, 2, 5, 6, 7, 4, 3, 8});
}

TEST_CASE("embedding invariants on random planar words") {
  Rng rng(139);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + rng.below(3);
    int k = rng.below(n + 1);
    std::vector<Letter> rep;
    for (int j = 1; j <= k; ++j) rep.push_back(j);
    FreeWord w = apply_braid(FreeWord(rep, n), random_braid(rng, n, 6));
    auto emb = is_planar(w);
    REQUIRE(emb.has_value());
    std::vector<int> expansion = whitehead_expansion(w);
    // labels weakly increase
    for (std::size_t p = 1; p < emb->labels.size(); ++p)
      CHECK(emb->labels[p - 1] <= emb->labels[p]);
    // pi maps the trace onto the line
    for (std::size_t j = 0; j < expansion.size(); ++j)
      CHECK(emb->labels[emb->pi[j] - 1] == expansion[j]);
    // arc families are nested
    auto nested = [](const std::vector<std::pair<int, int>>& arcs) {
      for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b) {
          int lo1 = std::min(arcs[a].first, arcs[a].second);
          int hi1 = std::max(arcs[a].first, arcs[a].second);
          bool in1 = lo1 < std::min(arcs[b].first, arcs[b].second) &&
                     std::min(arcs[b].first, arcs[b].second) < hi1;
          bool in2 = lo1 < std::max(arcs[b].first, arcs[b].second) &&
                     std::max(arcs[b].first, arcs[b].second) < hi1;
          if (in1 != in2) return false;
        }
      return true;
    };
    CHECK(nested(emb->upper));
    CHECK(nested(emb->lower));
  }
}

TEST_CASE("oracle agreement, exhaustive") {
  for (int n = 1; n <= 3; ++n)
    for (const FreeWord& w : all_reduced_words(n, 4))
      CHECK(is_planar(w).has_value() == planar_oracle(w));
  // deeper sweep at rank 2
  for (const FreeWord& w : all_reduced_words(2, 5))
    CHECK(is_planar(w).has_value() == planar_oracle(w));
}

TEST_CASE("oracle agreement, random length 6") {
  Rng rng(149);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + rng.below(3);
    FreeWord w = random_reduced_word(rng, n, 6);
    CHECK(is_planar(w).has_value() == planar_oracle(w));
  }
  CHECK(planar_oracle(FreeWord(2)));
  CHECK_THROWS_AS(planar_oracle(W("1 2 1 2 1 2 1", 2)), std::domain_error);
}

TEST_CASE("planar closure under the action") {
  Rng rng(151);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + rng.below(3);
    FreeWord w = apply_braid(FreeWord::generator(1, n), random_braid(rng, n, 7));
    CHECK(is_planar(w).has_value());
    CHECK(is_planar(apply_braid(w, random_braid(rng, n, 7))).has_value());
  }
}

TEST_CASE("planar implies the three cone exclusions") {
  Rng rng(157);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + rng.below(3);
    FreeWord w = random_reduced_word(rng, n, 6);
    if (!is_planar(w)) continue;
    CHECK(is_squarefree(w));
    for (int k = 1; k <= n; ++k) {
      std::vector<Letter> pre;
      for (int j = n; j >= k + 1; --j) pre.push_back(-j);
      pre.push_back(k);
      if (begins_with(w, FreeWord(pre, n))) {
        std::vector<Letter> conj;
        for (int j = k + 1; j <= n; ++j) conj.push_back(j);
        CHECK(w == conjugate(FreeWord::generator(k, n), FreeWord(conj, n)));
      }
      std::vector<Letter> pre3;
      for (int j = 1; j <= k - 1; ++j) pre3.push_back(j);
      pre3.push_back(-k);
      CHECK_FALSE(begins_with(w, FreeWord(pre3, n)));
    }
  }
}

TEST_CASE("diagram emission") {
  auto emb = is_planar(W("1 2 -1", 2));
  REQUIRE(emb.has_value());
  std::string svg = emit_diagram(*emb);
  CHECK(svg == emit_diagram(*emb));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("-z1") != std::string::npos);

  auto empty_emb = is_planar(FreeWord(2));
  REQUIRE(empty_emb.has_value());
  CHECK(empty_emb->labels.size() == 2);
  CHECK(empty_emb->upper.size() == 1);
  CHECK(empty_emb->lower.empty());

  auto t3 = is_planar(W("3", 3));
  REQUIRE(t3.has_value());
  CHECK(t3->labels.size() == 4);
  CHECK(t3->upper.size() == 2);
  CHECK(t3->lower.size() == 1);
}

TEST_CASE("ascending tuples force descending partners in nested families") {
  // random pair families {c_i, cbar_i} with max(c) < min(cbar): whenever
  // the family is nested and c ascends, cbar must descend
  Rng rng(251);
  int accepted = 0;
  for (int t = 0; t < 4000; ++t) {
    int m = 2 + rng.below(4);
    std::vector<int> c(m), cbar(m);
    for (int i = 0; i < m; ++i) c[i] = i + 1;  // ascending
    std::vector<int> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = m + 1 + i;
    for (int i = m - 1; i > 0; --i) std::swap(pool[i], pool[rng.below(i + 1)]);
    cbar = pool;
    bool nested = true;
    for (int i = 0; i < m && nested; ++i)
      for (int j = i + 1; j < m && nested; ++j) {
        auto between = [&](int x, int lo, int hi) {
          return std::min(lo, hi) < x && x < std::max(lo, hi);
        };
        bool in1 = between(c[j], c[i], cbar[i]);
        bool in2 = between(cbar[j], c[i], cbar[i]);
        nested = in1 == in2;
      }
    if (!nested) continue;
    ++accepted;
    for (int i = 1; i < m; ++i) CHECK(cbar[i - 1] > cbar[i]);
  }
  CHECK(accepted > 50);
}

TEST_CASE("orbit_reduce") {
  auto r1 = orbit_reduce(W("1 2", 3));
  REQUIRE(r1.has_value());
  CHECK(r1->k == 2);
  CHECK(r1->witness.factors.empty());

  auto r2 = orbit_reduce(W("1 2 -1", 2));
  REQUIRE(r2.has_value());
  CHECK(r2->k == 1);
  CHECK(apply_braid(W("1 2 -1", 2), r2->witness) == W("1", 2));

  CHECK_FALSE(orbit_reduce(W("1 -2", 2)).has_value());

  Rng rng(163);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + rng.below(4);
    int k = rng.below(n + 1);
    std::vector<Letter> rep;
    for (int j = 1; j <= k; ++j) rep.push_back(j);
    BraidWord b = random_braid(rng, n, 8);
    FreeWord w = apply_braid(FreeWord(rep, n), b);
    auto red = orbit_reduce(w);
    REQUIRE(red.has_value());
    CHECK(red->k == k);
    CHECK(apply_braid(w, red->witness) == FreeWord(rep, n));
  }
}

TEST_CASE("representatives are pairwise inequivalent") {
  // orbit_reduce is constant on orbits, so distinct k values can never be
  // connected by a braid
  Rng rng(167);
  for (int t = 0; t < 80; ++t) {
    int n = 2 + rng.below(3);
    int k = rng.below(n + 1);
    std::vector<Letter> rep;
    for (int j = 1; j <= k; ++j) rep.push_back(j);
    FreeWord moved = apply_braid(FreeWord(rep, n), random_braid(rng, n, 8));
    auto red = orbit_reduce(moved);
    REQUIRE(red.has_value());
    CHECK(red->k == k);
  }
}

TEST_CASE("t1 orbit witness") {
  // t_2 = t_1^{sigma_1}
  auto w1 = t1_orbit_witness(W("2", 3));
  REQUIRE(w1.has_value());
  CHECK(apply_braid(W("2", 3), *w1) == W("1", 3));

  CHECK_FALSE(t1_orbit_witness(W("1 2 2 3", 3)).has_value());

  Rng rng(173);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + rng.below(4);
    BraidWord b = random_braid(rng, n, 8);
    FreeWord w = apply_braid(FreeWord::generator(1, n), b);
    auto wit = t1_orbit_witness(w);
    REQUIRE(wit.has_value());
    CHECK(apply_braid(w, *wit) == FreeWord::generator(1, n));
  }

  // membership equivalence on arbitrary random words
  for (int t = 0; t < 200; ++t) {
    int n = 2 + rng.below(2);
    FreeWord w = random_reduced_word(rng, n, 6);
    auto cr = cyclic_reduce(w);
    bool criterion = cr.core.size() == 1 && cr.core.at(0) > 0 &&
                     is_planar(w).has_value();
    CHECK(t1_orbit_witness(w).has_value() == criterion);
  }
}

TEST_CASE("tuple orbit witness") {
  auto w1 = tuple_orbit_witness({W("1", 3), W("2", 3)});
  REQUIRE(w1.has_value());
  CHECK(w1->factors.empty());

  auto w2 = tuple_orbit_witness({W("2", 2), W("-2 1 2", 2)});
  REQUIRE(w2.has_value());
  CHECK(BraidAutomorphism::of(*w2) == BraidAutomorphism::of(B("-1", 2)));

  CHECK_FALSE(tuple_orbit_witness({W("2", 2), W("1", 2)}).has_value());

  Rng rng(179);
  for (int t = 0; t < 80; ++t) {
    int n = 2 + rng.below(3);
    int k = 1 + rng.below(n);
    BraidWord b = random_braid(rng, n, 7);
    std::vector<FreeWord> ws;
    for (int j = 1; j <= k; ++j)
      ws.push_back(apply_braid(FreeWord::generator(j, n), b));
    auto wit = tuple_orbit_witness(ws);
    REQUIRE(wit.has_value());
    for (int j = 1; j <= k; ++j)
      CHECK(apply_braid(ws[j - 1], *wit) == FreeWord::generator(j, n));
  }
}
