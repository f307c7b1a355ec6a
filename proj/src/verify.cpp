#include "braid/verify.hpp"

#include <algorithm>

#include "braid/dehornoy.hpp"
#include "braid/ends.hpp"
#include "braid/planar.hpp"
#include "braid/rng.hpp"
#include "braid/torsion.hpp"

namespace braid {

FreeWord random_reduced_word(Rng& rng, int rank, int max_len) {
  int len = rng.below(max_len + 1);
  std::vector<Letter> raw;
  raw.reserve(len);
  for (int i = 0; i < len; ++i) {
    Letter a;
    do {
      int idx = 1 + rng.below(rank);
      a = rng.flip() ? idx : -idx;
    } while (!raw.empty() && raw.back() == -a);
    raw.push_back(a);
  }
  return FreeWord(std::move(raw), rank);
}

BraidWord random_braid(Rng& rng, int strands, int max_len) {
  int len = strands >= 2 ? rng.below(max_len + 1) : 0;
  std::vector<int> fs;
  fs.reserve(len);
  for (int i = 0; i < len; ++i) {
    int idx = 1 + rng.below(strands - 1);
    fs.push_back(rng.flip() ? idx : -idx);
  }
  return BraidWord(strands, std::move(fs));
}

End random_end(Rng& rng, int rank, int max_len) {
  FreeWord u = random_reduced_word(rng, rank, max_len);
  FreeWord v;
  do {
    v = random_reduced_word(rng, rank, std::max(1, max_len));
  } while (v.empty());
  return End::make(u, v);
}

}  // namespace braid

namespace braid::verify {

namespace {

using Report = RelationReport;

Report suite_relations(const Options& opt) {
  return check_relations(opt.n);
}

Report suite_magnus(const Options& opt) {
  int n = opt.n;
  Report rep;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> down, up;
    for (int j = n - 1; j >= i; --j) down.push_back(-j);
    for (int j = i + 1; j <= n; ++j) up.push_back(j);
    BraidWord lhs = conjugate(BraidWord(n + 1, {-n, -n}), BraidWord(n + 1, down));
    BraidWord rhs = conjugate(BraidWord(n + 1, {-i, -i}), BraidWord(n + 1, up));
    rep.require(BraidAutomorphism::of(lhs) == BraidAutomorphism::of(rhs),
                "t_" + std::to_string(i) + " image identity in B_" +
                    std::to_string(n + 1));
    rep.require(BraidAutomorphism::of(rhs).permutation(n + 1) == n + 1,
                "t_" + std::to_string(i) + " image fixes [t_" +
                    std::to_string(n + 1) + "]");
  }
  for (int i = 1; i <= n - 1; ++i)
    rep.require(
        BraidAutomorphism::of(BraidWord(n + 1, {i})).permutation(n + 1) == n + 1,
        "sigma_" + std::to_string(i) + " fixes [t_" + std::to_string(n + 1) + "]");
  rep.require(
      BraidAutomorphism::of(BraidWord(n + 1, {n, n})).permutation(n + 1) == n + 1,
      "sigma_n^2 fixes [t_" + std::to_string(n + 1) + "]");
  return rep;
}

Report suite_lemma52(const Options& opt) {
  int n = opt.n;
  Report rep;
  if (n < 2) throw std::domain_error("lemma52 needs n >= 2");
  auto b_gen = [&](int i) {  // b_i for i < n, b_n = (e, t_n^-1)
    if (i < n) return SemidirectElement{BraidWord(n, {i}), FreeWord(n)};
    return SemidirectElement{BraidWord(n), invert(FreeWord::generator(n, n))};
  };
  std::vector<SemidirectElement> frak(n + 1, sd_identity(n));
  for (int k = 1; k <= n; ++k) {
    SemidirectElement conj = sd_identity(n);
    for (int j = n - 1; j >= k; --j) conj = sd_multiply(conj, sd_invert(b_gen(j)));
    frak[k] = sd_conjugate(sd_invert(b_gen(n)), conj);
    rep.require(
        sd_equal(frak[k], SemidirectElement{BraidWord(n), FreeWord::generator(k, n)}),
        "frak_t_" + std::to_string(k) + " = (1, t_" + std::to_string(k) + ")");
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int k = 1; k <= n; ++k) {
      SemidirectElement lhs = sd_conjugate(frak[k], sd_invert(b_gen(i)));
      SemidirectElement rhs =
          k == i + 1 ? frak[i]
          : k == i   ? sd_conjugate(frak[i + 1], sd_invert(frak[i]))
                     : frak[k];
      rep.require(sd_equal(lhs, rhs), "frak_t_" + std::to_string(k) +
                                          "^{b_" + std::to_string(i) +
                                          "^-1} matches the sigma table");
    }
  }
  return rep;
}

Report suite_trichotomy(const Options& opt) {
  Report rep;
  Rng rng(opt.seed * 2 + 1);
  int n = std::max(2, opt.n);
  for (int t = 0; t < opt.trials; ++t) {
    BraidWord b = random_braid(rng, n, opt.max_len);
    auto a = BraidAutomorphism::of(b);
    auto ai = BraidAutomorphism::of(invert(b));
    Trichotomy c = classify_sigma1(a), ci = classify_sigma1(ai);
    bool mirror = (c == Trichotomy::Neutral && ci == Trichotomy::Neutral) ||
                  (c == Trichotomy::Positive && ci == Trichotomy::Negative) ||
                  (c == Trichotomy::Negative && ci == Trichotomy::Positive);
    rep.require(mirror, "mirror classes for " + format_braid(b));
    bool t1_fixed = a.image(1) == FreeWord::generator(1, n);
    rep.require((c == Trichotomy::Neutral) == t1_fixed,
                "neutral iff t_1 fixed for " + format_braid(b));
    if (c != Trichotomy::Positive) {
      BraidWord nf = sigma1_nonpositive_form(b);
      bool alphabet_ok = true, has_neg1 = false, has_idx1 = false;
      for (int f : nf.factors) {
        if (f == 1) alphabet_ok = false;
        if (f == -1) has_neg1 = true;
        if (f == 1 || f == -1) has_idx1 = true;
      }
      rep.require(alphabet_ok, "nonpositive alphabet for " + format_braid(b));
      rep.require(BraidAutomorphism::of(nf) == a,
                  "nonpositive form matches " + format_braid(b));
      if (c == Trichotomy::Neutral)
        rep.require(!has_idx1, "neutral form avoids index 1 for " + format_braid(b));
      else
        rep.require(has_neg1, "negative form uses sigma_1^-1 for " + format_braid(b));
    }
  }
  return rep;
}

Report suite_order(const Options& opt) {
  Report rep;
  Rng rng(opt.seed * 2 + 2);
  int n = std::max(2, opt.n);
  auto leq = [](Ordering o) { return o != Ordering::Greater; };
  for (int t = 0; t < opt.trials; ++t) {
    BraidWord x = random_braid(rng, n, opt.max_len);
    BraidWord y = random_braid(rng, n, opt.max_len);
    BraidWord z = random_braid(rng, n, opt.max_len);
    Ordering xy = compare(x, y), yx = compare(y, x);
    bool anti = (xy == Ordering::Equal && yx == Ordering::Equal) ||
                (xy == Ordering::Less && yx == Ordering::Greater) ||
                (xy == Ordering::Greater && yx == Ordering::Less);
    rep.require(anti, "antisymmetry");
    if (leq(xy) && leq(compare(y, z)))
      rep.require(leq(compare(x, z)), "transitivity");
    BraidWord r = random_braid(rng, n, opt.max_len);
    rep.require(compare(concat(x, r), concat(y, r)) == xy, "right-invariance");
    rep.require((xy == Ordering::Equal) ==
                    (BraidAutomorphism::of(x) == BraidAutomorphism::of(y)),
                "equality matches the word problem");
  }
  for (int i = 1; i <= n - 1; ++i)
    rep.require(compare(BraidWord(n, {i}), BraidWord(n)) == Ordering::Greater,
                "sigma_" + std::to_string(i) + " > 1");
  return rep;
}

Report suite_ends_order(const Options& opt) {
  Report rep;
  Rng rng(opt.seed * 2 + 3);
  int n = std::max(2, opt.n);
  for (int t = 0; t < opt.trials; ++t) {
    End e1 = random_end(rng, n, opt.max_len);
    End e2 = random_end(rng, n, opt.max_len);
    BraidWord b = random_braid(rng, n, opt.max_len);
    Ordering before = compare_ends(e1, e2);
    Ordering after = compare_ends(act_on_end(e1, b), act_on_end(e2, b));
    rep.require(before == after, "order preserved under " + format_braid(b));
    BraidWord x = random_braid(rng, n, opt.max_len);
    BraidWord y = random_braid(rng, n, opt.max_len);
    rep.require(thurston_compare(x, y) == compare(x, y),
                "thurston agrees with dehornoy");
  }
  return rep;
}

Report suite_squarefree(const Options& opt) {
  Report rep;
  Rng rng(opt.seed * 2 + 4);
  int n = std::max(2, opt.n);
  for (int t = 0; t < opt.trials; ++t) {
    BraidWord b = random_braid(rng, n, opt.max_len);
    FreeWord w = apply_braid(FreeWord::generator(1, n), b);
    rep.require(is_squarefree(w), "t_1 image squarefree");
    // the boundary-end statement needs n >= 3: at n = 2 already
    // t_1^{sigma_1^2} z_1^inf = t_2^-1 t_2^-1 t_1^-1 ... carries a square
    if (n >= 3)
      rep.require(end_is_squarefree(End::make(w, z1(n))), "boundary end squarefree");
    for (int k = 1; k <= n; ++k) {
      std::vector<Letter> ex;
      for (int j = n; j >= k + 1; --j) ex.push_back(-j);
      ex.push_back(k);
      if (begins_with(w, FreeWord(ex, n))) {
        std::vector<Letter> conj;
        for (int j = k + 1; j <= n; ++j) conj.push_back(j);
        rep.require(w == conjugate(FreeWord::generator(k, n), FreeWord(conj, n)),
                    "cone exclusion (ii) at k=" + std::to_string(k));
      }
      std::vector<Letter> ex3;
      for (int j = 1; j <= k - 1; ++j) ex3.push_back(j);
      ex3.push_back(-k);
      rep.require(!begins_with(w, FreeWord(ex3, n)),
                  "cone exclusion (iii) at k=" + std::to_string(k));
    }
  }
  return rep;
}

Report suite_planar_closure(const Options& opt) {
  Report rep;
  Rng rng(opt.seed * 2 + 5);
  int n = std::max(2, std::min(opt.n, 5));
  int len = std::min(opt.max_len, 8);
  for (int t = 0; t < opt.trials; ++t) {
    int k = rng.below(n + 1);
    std::vector<Letter> rep_word;
    for (int j = 1; j <= k; ++j) rep_word.push_back(j);
    FreeWord w = apply_braid(FreeWord(rep_word, n), random_braid(rng, n, len));
    rep.require(is_planar(w).has_value(), "orbit member is planar");
    FreeWord w2 = apply_braid(w, random_braid(rng, n, len));
    rep.require(is_planar(w2).has_value(), "planarity preserved by the action");
  }
  return rep;
}

Report suite_humphries(const Options& opt) {
  Report rep;
  Rng rng(opt.seed * 2 + 6);
  int n = std::max(2, opt.n);
  for (int t = 0; t < opt.trials; ++t) {
    BraidWord b = random_braid(rng, n, opt.max_len);
    std::vector<TorsionWord> images;
    for (int i = 1; i <= n; ++i)
      images.push_back(
          tw_apply_braid(TorsionWord::generator(i, opt.m, n), b));
    BraidWord rec = tw_recover_braid(images);
    rep.require(BraidAutomorphism::of(rec) == BraidAutomorphism::of(b),
                "recovered braid equals input for " + format_braid(b));
    if (!BraidAutomorphism::of(b).is_identity()) {
      bool moved = false;
      for (int i = 1; i <= n && !moved; ++i)
        moved = images[i - 1] != TorsionWord::generator(i, opt.m, n);
      rep.require(moved, "nonidentity braid moves some tau_i");
    }
  }
  return rep;
}

Report suite_wada_faithful(const Options& opt) {
  Report rep;
  Rng rng(opt.seed * 2 + 7);
  int n = std::max(2, opt.n);
  auto basis = phi_basis(2, n);
  for (int t = 0; t < opt.trials; ++t) {
    BraidWord b = random_braid(rng, n + 1, opt.max_len);
    if (BraidAutomorphism::of(b).is_identity()) continue;
    bool moved = false;
    for (int k = 1; k <= n && !moved; ++k) {
      FreeWord image = wada_action(FreeWord::generator(k, n), b, 2);
      moved = image != FreeWord::generator(k, n);
    }
    rep.require(moved, "nonidentity braid moves the variant-2 basis: " +
                           format_braid(b));
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"relations", "magnus",      "lemma52",        "trichotomy",
          "order",     "ends-order",  "squarefree",     "planar-closure",
          "humphries", "wada-faithful"};
}

bool is_suite(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

RelationReport run_suite(const std::string& name, const Options& opt) {
  if (name == "relations") return suite_relations(opt);
  if (name == "magnus") return suite_magnus(opt);
  if (name == "lemma52") return suite_lemma52(opt);
  if (name == "trichotomy") return suite_trichotomy(opt);
  if (name == "order") return suite_order(opt);
  if (name == "ends-order") return suite_ends_order(opt);
  if (name == "squarefree") return suite_squarefree(opt);
  if (name == "planar-closure") return suite_planar_closure(opt);
  if (name == "humphries") return suite_humphries(opt);
  if (name == "wada-faithful") return suite_wada_faithful(opt);
  throw std::domain_error("unknown suite '" + name + "'");
}

}  // namespace braid::verify
