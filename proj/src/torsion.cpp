#include "braid/torsion.hpp"

#include <algorithm>
#include <sstream>

namespace braid {

namespace {

int mod_exp(long long e, int m) {
  long long r = e % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

}  // namespace

TorsionWord::TorsionWord(int modulus, int rank, std::vector<Syllable> raw)
    : modulus_(modulus), rank_(rank) {
  if (modulus < 2) throw std::domain_error("modulus must be >= 2");
  for (auto& [g, e] : raw) {
    if (g < 1 || g > rank)
      throw std::domain_error("torsion generator index out of range");
    int ee = mod_exp(e, modulus);
    if (ee == 0) continue;
    if (!syll_.empty() && syll_.back().first == g) {
      int merged = mod_exp(syll_.back().second + ee, modulus);
      syll_.pop_back();
      if (merged != 0) syll_.emplace_back(g, merged);
    } else {
      syll_.emplace_back(g, ee);
    }
  }
}

TorsionWord TorsionWord::generator(int i, int modulus, int rank) {
  return TorsionWord(modulus, rank, {{i, 1}});
}

static void require_compatible(const TorsionWord& a, const TorsionWord& b) {
  if (a.modulus() != b.modulus() || a.rank() != b.rank())
    throw std::domain_error("modulus/rank mismatch");
}

TorsionWord tw_multiply(const TorsionWord& a, const TorsionWord& b) {
  require_compatible(a, b);
  std::vector<TorsionWord::Syllable> out = a.syllables();
  int m = a.modulus();
  for (auto s : b.syllables()) {
    if (!out.empty() && out.back().first == s.first) {
      int merged = mod_exp(out.back().second + s.second, m);
      out.pop_back();
      if (merged != 0) out.emplace_back(s.first, merged);
    } else {
      out.push_back(s);
    }
  }
  return TorsionWord(a.modulus(), a.rank(), std::move(out));
}

TorsionWord tw_invert(const TorsionWord& a) {
  std::vector<TorsionWord::Syllable> out;
  out.reserve(a.syllable_count());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
    out.emplace_back(it->first, a.modulus() - it->second);
  return TorsionWord(a.modulus(), a.rank(), std::move(out));
}

TorsionWord tw_conjugate(const TorsionWord& a, const TorsionWord& g) {
  return tw_multiply(tw_multiply(tw_invert(g), a), g);
}

TorsionWord tw_power(const TorsionWord& a, int e) {
  TorsionWord acc(a.modulus(), a.rank());
  TorsionWord base = e < 0 ? tw_invert(a) : a;
  int k = e < 0 ? -e : e;
  for (int i = 0; i < k; ++i) acc = tw_multiply(acc, base);
  return acc;
}

long long tw_length(const TorsionWord& w) {
  long long total = 0;
  int m = w.modulus();
  for (auto [g, e] : w.syllables()) {
    (void)g;
    if (e <= m / 2)
      total += 2LL * e;
    else
      total += -2LL * (e - m) - 1;  // representative e-m in [-1..-floor((m-1)/2)]
  }
  return total;
}

TorsionWord project(const FreeWord& w, int modulus) {
  std::vector<TorsionWord::Syllable> raw;
  for (Letter a : w.letters())
    raw.emplace_back(letter_index(a), a > 0 ? 1 : modulus - 1);
  return TorsionWord(modulus, w.rank(), std::move(raw));
}

TorsionWord tw_apply_gen(const TorsionWord& w, int i, int sign) {
  int n = w.rank();
  if (i < 1 || i > n - 1)
    throw std::domain_error("generator index out of range for torsion rank");
  int m = w.modulus();
  TorsionWord out(m, n);
  auto tau = [&](int g) { return TorsionWord::generator(g, m, n); };
  for (auto [g, e] : w.syllables()) {
    TorsionWord img;
    if (sign > 0) {
      if (g == i)
        img = tau(i + 1);
      else if (g == i + 1)
        img = tw_conjugate(tau(i), tau(i + 1));
      else
        img = tau(g);
    } else {
      if (g == i)
        img = tw_conjugate(tau(i + 1), tw_invert(tau(i)));
      else if (g == i + 1)
        img = tau(i);
      else
        img = tau(g);
    }
    out = tw_multiply(out, tw_power(img, e));
  }
  return out;
}

TorsionWord tw_apply_braid(const TorsionWord& w, const BraidWord& b) {
  if (w.rank() != b.strands)
    throw std::domain_error("torsion rank does not match braid strands");
  TorsionWord cur = w;
  for (int f : b.factors)
    cur = tw_apply_gen(cur, f < 0 ? -f : f, f < 0 ? -1 : +1);
  return cur;
}

namespace {

struct TorsionDecomposition {
  std::vector<int> pi;             // 1-based images
  std::vector<TorsionWord> conj;   // w_i, indices 0..n+1
  std::vector<TorsionWord> diff;   // u_i, indices 0..n
};

TorsionDecomposition decompose(const std::vector<TorsionWord>& images) {
  int n = static_cast<int>(images.size());
  if (n == 0) throw std::domain_error("empty image tuple");
  int m = images[0].modulus();
  for (const auto& v : images)
    if (v.modulus() != m || v.rank() != n)
      throw std::domain_error("inconsistent modulus/rank in image tuple");
  TorsionDecomposition d;
  d.pi.assign(n, 0);
  d.conj.assign(n + 2, TorsionWord(m, n));
  std::vector<bool> hit(n + 1, false);
  TorsionWord product(m, n);
  for (int i = 1; i <= n; ++i) {
    const auto& s = images[i - 1].syllables();
    std::size_t len = s.size();
    if (len % 2 == 0)
      throw TupleError(TupleError::NotConjugateToGenerator,
                       "tau_" + std::to_string(i) +
                           " image has even syllable count");
    std::size_t h = len / 2;
    if (s[h].second != 1)
      throw TupleError(TupleError::NotConjugateToGenerator,
                       "tau_" + std::to_string(i) +
                           " image is not a conjugate of a generator");
    for (std::size_t j = 0; j < h; ++j)
      if (s[j].first != s[len - 1 - j].first ||
          mod_exp(s[j].second + s[len - 1 - j].second, m) != 0)
        throw TupleError(TupleError::NotConjugateToGenerator,
                         "tau_" + std::to_string(i) +
                             " image is not a conjugate of a generator");
    int target = s[h].first;
    if (hit[target])
      throw TupleError(TupleError::NotPermutation,
                       "two images conjugate to tau_" + std::to_string(target));
    hit[target] = true;
    d.pi[i - 1] = target;
    d.conj[i] = TorsionWord(
        m, n, std::vector<TorsionWord::Syllable>(s.begin() + h + 1, s.end()));
    product = tw_multiply(product, images[i - 1]);
  }
  std::vector<TorsionWord::Syllable> tword;
  for (int i = 1; i <= n; ++i) tword.emplace_back(i, 1);
  if (product != TorsionWord(m, n, tword))
    throw TupleError(TupleError::ProductLawViolated,
                     "images do not fix the product tau_1...tau_n");
  d.diff.assign(n + 1, TorsionWord(m, n));
  for (int i = 0; i <= n; ++i)
    d.diff[i] = tw_multiply(d.conj[i], tw_invert(d.conj[i + 1]));
  return d;
}

bool images_identity(const std::vector<TorsionWord>& images) {
  for (int i = 1; i <= static_cast<int>(images.size()); ++i) {
    const auto& s = images[i - 1].syllables();
    if (!(s.size() == 1 && s[0].first == i && s[0].second == 1)) return false;
  }
  return true;
}

std::vector<TorsionWord> prefix_gen_torsion(int i, int sign,
                                            const std::vector<TorsionWord>& im) {
  std::vector<TorsionWord> out = im;
  if (sign > 0) {
    out[i - 1] = im[i];
    out[i] = tw_conjugate(im[i - 1], im[i]);
  } else {
    out[i - 1] = tw_conjugate(im[i], tw_invert(im[i - 1]));
    out[i] = im[i - 1];
  }
  return out;
}

}  // namespace

BraidWord tw_recover_braid(const std::vector<TorsionWord>& images) {
  int n = static_cast<int>(images.size());
  int m = images.empty() ? 2 : images[0].modulus();
  std::vector<TorsionWord> cur = images;
  TorsionDecomposition d = decompose(cur);
  std::vector<int> prefixed;
  long long guard = 0;
  while (!images_identity(cur)) {
    // a_i: trailing tau_{i^pi} exponent of u_{i-1};
    // b_i: leading tau_{i^pi} exponent of u_i
    int choice = 0;
    for (int i = 1; i <= n && choice == 0; ++i) {
      int target = d.pi[i - 1];
      if (i >= 2) {
        const auto& s = d.diff[i - 1].syllables();
        int a = (!s.empty() && s.back().first == target) ? s.back().second : 0;
        if (a >= m / 2 && a <= m - 1) choice = i - 1;  // prefix sigma_{i-1}
      }
      if (choice == 0 && i <= n - 1) {
        const auto& s = d.diff[i].syllables();
        int bexp = (!s.empty() && s.front().first == target) ? s.front().second : 0;
        if (bexp >= (m + 1) / 2 && bexp <= m - 1) choice = -i;  // prefix sigma_i^-1
      }
    }
    if (choice == 0)
      throw NoReducingGenerator("torsion tuple admits no reducing generator");
    cur = prefix_gen_torsion(choice < 0 ? -choice : choice, choice < 0 ? -1 : +1,
                             cur);
    d = decompose(cur);
    prefixed.push_back(choice);
    if (++guard > 1000000)
      throw NoReducingGenerator("torsion descent failed to terminate");
  }
  std::vector<int> fs;
  fs.reserve(prefixed.size());
  for (int g : prefixed) fs.push_back(-g);
  return BraidWord(n, std::move(fs));
}

std::string format_torsion(const TorsionWord& w) {
  if (w.empty()) return "e";
  std::string out;
  bool first = true;
  for (auto [g, e] : w.syllables()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(g) + "^" + std::to_string(e);
  }
  return out;
}

TorsionWord parse_torsion(const std::string& text, int modulus, int rank) {
  std::vector<TorsionWord::Syllable> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    auto caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        raw.emplace_back(std::stoi(tok), 1);
      } else {
        raw.emplace_back(std::stoi(tok.substr(0, caret)),
                         std::stoi(tok.substr(caret + 1)));
      }
    } catch (const std::exception&) {
      throw std::domain_error("bad torsion token '" + tok + "'");
    }
  }
  return TorsionWord(modulus, rank, std::move(raw));
}

PhiElement::PhiElement(TorsionWord w) : word(std::move(w)) {
  if (word.modulus() != 2)
    throw std::domain_error("Phi elements live in C_2 free products");
  long long total = 0;
  for (auto [g, e] : word.syllables()) {
    (void)g;
    total += e;
  }
  if (total % 2 != 0)
    throw std::domain_error("Phi element must have even exponent sum");
}

std::vector<PhiElement> phi_basis(int variant, int n) {
  if (n < 1) throw std::domain_error("phi_basis needs n >= 1");
  int r = n + 1;
  auto tau = [&](int i) { return TorsionWord::generator(i, 2, r); };
  auto prod_up = [&](int lo, int hi) {
    TorsionWord p(2, r);
    for (int i = lo; i <= hi; ++i) p = tw_multiply(p, tau(i));
    return p;
  };
  auto prod_down = [&](int hi, int lo) {
    TorsionWord p(2, r);
    for (int i = hi; i >= lo; --i) p = tw_multiply(p, tau(i));
    return p;
  };
  std::vector<PhiElement> basis;
  basis.reserve(n);
  for (int k = 1; k <= n; ++k) {
    switch (variant) {
      case 1:
        basis.emplace_back(tw_multiply(tau(k), tau(k + 1)));
        break;
      case 2:
        basis.emplace_back(tw_multiply(tau(r), tau(k)));
        break;
      case 3:
        basis.emplace_back(
            tw_multiply(tw_conjugate(tau(r), prod_up(1, k - 1)), tau(k)));
        break;
      case 4:
        basis.emplace_back(tw_conjugate(
            tw_multiply(tw_conjugate(tau(r), prod_down(n, 1)), tau(k)),
            prod_up(k, r)));
        break;
      default:
        throw std::domain_error("phi_basis variant must be 1..4");
    }
  }
  return basis;
}

FreeWord phi_to_free(const PhiElement& g) {
  int r = g.word.rank();
  int n = r - 1;
  std::vector<Letter> raw;
  const auto& s = g.word.syllables();
  // m = 2: every syllable has exponent 1; pair consecutive letters
  // tau_a tau_b = (tau_r tau_a)^-1 (tau_r tau_b)
  for (std::size_t j = 0; j + 1 < s.size(); j += 2) {
    int a = s[j].first, b = s[j + 1].first;
    if (a != r) raw.push_back(-a);
    if (b != r) raw.push_back(b);
  }
  return FreeWord(std::move(raw), n);
}

PhiElement phi_from_free(const FreeWord& w, int n) {
  int r = n + 1;
  TorsionWord out(2, r);
  auto tau = [&](int i) { return TorsionWord::generator(i, 2, r); };
  for (Letter a : w.letters()) {
    int k = letter_index(a);
    TorsionWord y = tw_multiply(tau(r), tau(k));
    out = tw_multiply(out, a > 0 ? y : tw_invert(y));
  }
  return PhiElement(out);
}

SubgroupFolder::SubgroupFolder(std::vector<FreeWord> generators, int ambient_rank) {
  gen_count_ = static_cast<int>(generators.size());
  for (int k = 0; k < gen_count_; ++k) {
    const FreeWord& g = generators[k];
    if (g.rank() != ambient_rank)
      throw std::domain_error("generator rank mismatch");
    if (g.empty())
      throw std::domain_error("trivial subgroup generator");
    int prev = 0;  // base
    for (std::size_t j = 0; j < g.size(); ++j) {
      int next = (j + 1 == g.size()) ? 0 : vertex_count_++;
      Letter a = g.at(j);
      FreeWord dec(gen_count_);
      if (j + 1 == g.size()) dec = FreeWord::generator(k + 1, gen_count_);
      if (a > 0)
        edges_.push_back({prev, next, a, dec});
      else
        edges_.push_back({next, prev, -a, invert(dec)});
      prev = next;
    }
  }
  fold();
}

void SubgroupFolder::fold() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ei = 0; ei < edges_.size() && !changed; ++ei) {
      for (std::size_t fi = ei + 1; fi < edges_.size() && !changed; ++fi) {
        Edge& e = edges_[ei];
        Edge& f = edges_[fi];
        if (e.label != f.label) continue;
        // a fold needs two edges reading the same signed letter from a
        // shared vertex: either both forward from a common source or both
        // backward from a common target
        int p, q;
        bool e_fwd, f_fwd;
        if (e.a == f.a) {
          p = e.b; q = f.b; e_fwd = true; f_fwd = true;
        } else if (e.b == f.b) {
          p = e.a; q = f.a; e_fwd = false; f_fwd = false;
        } else {
          continue;
        }
        // traversal decorations from the shared vertex's side
        FreeWord de = e_fwd ? e.h : invert(e.h);
        FreeWord df = f_fwd ? f.h : invert(f.h);
        if (p == q) {
          if (de != df)
            throw std::domain_error("generators are not a free basis");
          edges_.erase(edges_.begin() + fi);
          changed = true;
          break;
        }
        int keep = p, drop = q;
        FreeWord delta = multiply(invert(df), de);
        if (drop == 0) {  // never gauge the base vertex
          std::swap(keep, drop);
          // re-derive the gauge for the swapped victim: c(drop) must match
          // c(keep) along f instead of e
          delta = multiply(invert(de), df);
        }
        for (Edge& g : edges_) {
          bool out_side = g.a == drop;
          bool in_side = g.b == drop;
          if (out_side && in_side)
            g.h = multiply(multiply(invert(delta), g.h), delta);
          else if (out_side)
            g.h = multiply(invert(delta), g.h);
          else if (in_side)
            g.h = multiply(g.h, delta);
        }
        for (Edge& g : edges_) {
          if (g.a == drop) g.a = keep;
          if (g.b == drop) g.b = keep;
        }
        // the two folded edges are now parallel with equal decorations
        edges_.erase(edges_.begin() + fi);
        changed = true;
      }
    }
  }
}

std::optional<FreeWord> SubgroupFolder::express(const FreeWord& w) const {
  int at = 0;
  FreeWord acc(gen_count_);
  for (Letter x : w.letters()) {
    bool moved = false;
    for (const Edge& e : edges_) {
      if (x > 0 && e.a == at && e.label == x) {
        acc = multiply(acc, e.h);
        at = e.b;
        moved = true;
        break;
      }
      if (x < 0 && e.b == at && e.label == -x) {
        acc = multiply(acc, invert(e.h));
        at = e.a;
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  if (at != 0) return std::nullopt;
  return acc;
}

FreeWord rewrite_in_basis(const PhiElement& g,
                          const std::vector<PhiElement>& basis) {
  int n = static_cast<int>(basis.size());
  std::vector<FreeWord> gens;
  gens.reserve(n);
  for (const PhiElement& x : basis) gens.push_back(phi_to_free(x));
  SubgroupFolder folder(std::move(gens), n);
  auto expr = folder.express(phi_to_free(g));
  if (!expr) throw NotInSubgroup("element is not in the span of the basis");
  return *expr;
}

namespace {

FreeWord wada1_apply_gen(const FreeWord& w, int i, int sign, int m_param) {
  int n = w.rank();
  std::vector<FreeWord> images;
  for (int j = 1; j <= n; ++j) images.push_back(FreeWord::generator(j, n));
  FreeWord xi = FreeWord::generator(i, n);
  FreeWord xi1 = FreeWord::generator(i + 1, n);
  int reps = m_param < 0 ? -m_param : m_param;
  if (sign > 0) {
    images[i - 1] = xi1;
    std::vector<Letter> raw;
    for (int k = 0; k < reps; ++k) raw.push_back(m_param > 0 ? -(i + 1) : i + 1);
    raw.push_back(i);
    for (int k = 0; k < reps; ++k) raw.push_back(m_param > 0 ? i + 1 : -(i + 1));
    images[i] = FreeWord(std::move(raw), n);  // x_i^{x_{i+1}^m}
  } else {
    std::vector<Letter> raw;
    for (int k = 0; k < reps; ++k) raw.push_back(m_param > 0 ? i : -i);
    raw.push_back(i + 1);
    for (int k = 0; k < reps; ++k) raw.push_back(m_param > 0 ? -i : i);
    images[i - 1] = FreeWord(std::move(raw), n);  // x_{i+1}^{x_i^-m}
    images[i] = xi;
  }
  return apply_tuple(w, images);
}

}  // namespace

FreeWord wada_action(const FreeWord& xw, const BraidWord& b, int variant,
                     int m_param) {
  int n = xw.rank();
  if (variant == 1) {
    if (b.strands != n)
      throw std::domain_error("variant 1 acts through braids on n strands");
    FreeWord cur = xw;
    for (int f : b.factors)
      cur = wada1_apply_gen(cur, f < 0 ? -f : f, f < 0 ? -1 : +1, m_param);
    return cur;
  }
  if (variant < 2 || variant > 4)
    throw std::domain_error("wada variant must be 1..4");
  if (b.strands != n + 1)
    throw std::domain_error("variants 2..4 act through braids on n+1 strands");
  std::vector<PhiElement> basis = phi_basis(variant, n);
  TorsionWord expanded(2, n + 1);
  for (Letter a : xw.letters()) {
    const TorsionWord& x = basis[letter_index(a) - 1].word;
    expanded = tw_multiply(expanded, a > 0 ? x : tw_invert(x));
  }
  TorsionWord image = tw_apply_braid(expanded, b);
  return rewrite_in_basis(PhiElement(image), basis);
}

namespace {

// Surface generators encoded in a rank-2g free word: x_k = 2k-1, y_k = 2k.
FreeWord surf_x(int k, int g) { return FreeWord::generator(2 * k - 1, 2 * g); }
FreeWord surf_y(int k, int g) { return FreeWord::generator(2 * k, 2 * g); }

std::vector<FreeWord> surf_identity(int g) {
  std::vector<FreeWord> t;
  for (int j = 1; j <= 2 * g; ++j) t.push_back(FreeWord::generator(j, 2 * g));
  return t;
}

std::vector<FreeWord> alpha_tuple(int i, int g) {
  auto t = surf_identity(g);
  t[2 * i - 2] = multiply(invert(surf_y(i, g)), surf_x(i, g));
  return t;
}

std::vector<FreeWord> beta_tuple(int i, int g) {
  auto t = surf_identity(g);
  t[2 * i - 1] = multiply(surf_x(i, g), surf_y(i, g));
  return t;
}

std::vector<FreeWord> gamma_tuple(int i, int g) {
  auto t = surf_identity(g);
  FreeWord xi = surf_x(i, g), yi = surf_y(i, g);
  FreeWord xj = surf_x(i + 1, g), yj = surf_y(i + 1, g);
  FreeWord yj_conj = conjugate(yj, xj);              // y_{i+1}^{x_{i+1}}
  t[2 * i - 2] = multiply(multiply(yj_conj, invert(yi)), xi);
  t[2 * i - 1] = conjugate(yi, invert(yj_conj));
  t[2 * i] = multiply(multiply(xj, yi), invert(yj_conj));
  return t;
}

TorsionWord surf_ident_word(const FreeWord& w, int g) {
  int r = 2 * g + 1;
  auto tau = [&](int i) { return TorsionWord::generator(i, 2, r); };
  std::vector<TorsionWord> images(2 * g, TorsionWord(2, r));
  for (int k = 1; k <= g; ++k) {
    images[2 * k - 2] = tw_multiply(tau(2 * k + 1), tau(2 * k));
    TorsionWord yk = tau(2 * k + 1);
    for (int i = 1; i <= 2 * k + 1; ++i) yk = tw_multiply(yk, tau(i));
    images[2 * k - 1] = yk;
  }
  TorsionWord out(2, r);
  for (Letter a : w.letters()) {
    const TorsionWord& im = images[letter_index(a) - 1];
    out = tw_multiply(out, a > 0 ? im : tw_invert(im));
  }
  return out;
}

}  // namespace

RelationReport surface_check(int g) {
  if (g < 1) throw std::domain_error("surface_check needs g >= 1");
  RelationReport rep;
  int r = 2 * g + 1;

  // commutator product maps to (tau_1 ... tau_{2g+1})^2
  FreeWord comm(2 * g);
  for (int k = 1; k <= g; ++k) {
    FreeWord x = surf_x(k, g), y = surf_y(k, g);
    comm = multiply(comm,
                    multiply(multiply(invert(x), invert(y)), multiply(x, y)));
  }
  TorsionWord square(2, r);
  for (int rep2 = 0; rep2 < 2; ++rep2)
    for (int i = 1; i <= r; ++i)
      square = tw_multiply(square, TorsionWord::generator(i, 2, r));
  rep.require(surf_ident_word(comm, g) == square,
              "commutator product maps to the squared boundary word");

  // commuting squares: sigma_1 -> alpha_1, sigma_{2i} -> beta_i,
  // sigma_{2i+1} -> gamma_i
  for (int j = 1; j <= 2 * g; ++j) {
    std::vector<FreeWord> twist;
    std::string name;
    if (j == 1) {
      twist = alpha_tuple(1, g);
      name = "alpha_1";
    } else if (j % 2 == 0) {
      twist = beta_tuple(j / 2, g);
      name = "beta_" + std::to_string(j / 2);
    } else {
      twist = gamma_tuple((j - 1) / 2, g);
      name = "gamma_" + std::to_string((j - 1) / 2);
    }
    for (int gen = 1; gen <= 2 * g; ++gen) {
      FreeWord G = FreeWord::generator(gen, 2 * g);
      TorsionWord lhs = surf_ident_word(apply_tuple(G, twist), g);
      TorsionWord rhs = tw_apply_gen(surf_ident_word(G, g), j, +1);
      rep.require(lhs == rhs, "sigma_" + std::to_string(j) + " ~ " + name +
                                  " on generator " + std::to_string(gen));
    }
  }
  return rep;
}

}  // namespace braid
