#include "braid/braids.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braid {

BraidWord::BraidWord(int n, std::vector<int> fs) : strands(n), factors(std::move(fs)) {
  for (int f : factors) {
    int i = f < 0 ? -f : f;
    if (f == 0 || i < 1 || i > strands - 1)
      throw std::domain_error("braid factor " + std::to_string(f) +
                              " out of range for " + std::to_string(strands) +
                              " strands");
  }
}

BraidWord invert(const BraidWord& b) {
  std::vector<int> fs(b.factors.rbegin(), b.factors.rend());
  for (int& f : fs) f = -f;
  return BraidWord(b.strands, std::move(fs));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::domain_error("strand count mismatch");
  std::vector<int> fs = a.factors;
  fs.insert(fs.end(), b.factors.begin(), b.factors.end());
  return BraidWord(a.strands, std::move(fs));
}

BraidWord conjugate(const BraidWord& a, const BraidWord& g) {
  return concat(concat(invert(g), a), g);
}

std::string format_braid(const BraidWord& b) {
  if (b.factors.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < b.factors.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b.factors[i]);
  }
  return out;
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::vector<int> fs;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::domain_error("bad braid token '" + tok + "'");
    }
    if (used != tok.size())
      throw std::domain_error("bad braid token '" + tok + "'");
    fs.push_back(v);
  }
  return BraidWord(strands, std::move(fs));
}

FreeWord apply_gen(const FreeWord& w, int i, int sign) {
  int n = w.rank();
  if (i < 1 || i > n - 1)
    throw std::domain_error("generator index " + std::to_string(i) +
                            " out of range for rank " + std::to_string(n));
  std::vector<Letter> raw;
  raw.reserve(3 * w.size());
  auto push = [&raw](Letter a) {
    if (!raw.empty() && raw.back() == -a)
      raw.pop_back();
    else
      raw.push_back(a);
  };
  for (Letter a : w.letters()) {
    int k = letter_index(a);
    bool pos = a > 0;
    if (sign > 0) {
      if (k == i) {
        push(pos ? i + 1 : -(i + 1));
      } else if (k == i + 1) {
        // t_{i+1} -> t_{i+1}^-1 t_i t_{i+1}
        if (pos) {
          push(-(i + 1));
          push(i);
          push(i + 1);
        } else {
          push(-(i + 1));
          push(-i);
          push(i + 1);
        }
      } else {
        push(a);
      }
    } else {
      if (k == i) {
        // t_i -> t_i t_{i+1} t_i^-1
        if (pos) {
          push(i);
          push(i + 1);
          push(-i);
        } else {
          push(i);
          push(-(i + 1));
          push(-i);
        }
      } else if (k == i + 1) {
        push(pos ? i : -i);
      } else {
        push(a);
      }
    }
  }
  return FreeWord(std::move(raw), n);
}

FreeWord apply_braid(const FreeWord& w, const BraidWord& b) {
  if (w.rank() != b.strands)
    throw std::domain_error("word rank does not match braid strands");
  FreeWord cur = w;
  for (int f : b.factors) cur = apply_gen(cur, f < 0 ? -f : f, f < 0 ? -1 : +1);
  return cur;
}

FreeWord apply_tuple(const FreeWord& w, const std::vector<FreeWord>& images) {
  int n = static_cast<int>(images.size());
  if (w.rank() > n)
    throw std::domain_error("word rank exceeds the endomorphism tuple");
  FreeWord out(n);
  for (Letter a : w.letters()) {
    const FreeWord& im = images[letter_index(a) - 1];
    out = multiply(out, a > 0 ? im : invert(im));
  }
  return out;
}

std::vector<FreeWord> compose_tuples(const std::vector<FreeWord>& a,
                                     const std::vector<FreeWord>& b) {
  std::vector<FreeWord> out;
  out.reserve(a.size());
  for (const FreeWord& w : a) out.push_back(apply_tuple(w, b));
  return out;
}

BraidAutomorphism BraidAutomorphism::identity(int n) {
  BraidAutomorphism a;
  for (int i = 1; i <= n; ++i) a.images_.push_back(FreeWord::generator(i, n));
  a.decompose();
  return a;
}

BraidAutomorphism BraidAutomorphism::of(const BraidWord& b) {
  BraidAutomorphism a;
  for (int i = 1; i <= b.strands; ++i)
    a.images_.push_back(apply_braid(FreeWord::generator(i, b.strands), b));
  a.decompose();
  return a;
}

void BraidAutomorphism::decompose() {
  int n = rank();
  pi_.assign(n, 0);
  conj_.assign(n + 2, FreeWord(n));
  std::vector<bool> hit(n + 1, false);
  FreeWord product(n);
  for (int i = 1; i <= n; ++i) {
    const FreeWord& v = images_[i - 1];
    std::size_t len = v.size();
    if (len % 2 == 0)
      throw TupleError(TupleError::NotConjugateToGenerator,
                       "image of t_" + std::to_string(i) +
                           " has even length, not a conjugate of a generator");
    std::size_t h = len / 2;
    Letter mid = v.at(h);
    if (mid < 0)
      throw TupleError(TupleError::NotConjugateToGenerator,
                       "image of t_" + std::to_string(i) +
                           " is conjugate to an inverse generator");
    for (std::size_t j = 0; j < h; ++j)
      if (v.at(j) != -v.at(len - 1 - j))
        throw TupleError(TupleError::NotConjugateToGenerator,
                         "image of t_" + std::to_string(i) +
                             " is not a conjugate of a generator");
    pi_[i - 1] = mid;
    if (hit[mid])
      throw TupleError(TupleError::NotPermutation,
                       "two images conjugate to t_" + std::to_string(mid));
    hit[mid] = true;
    conj_[i] = FreeWord(
        std::vector<Letter>(v.letters().begin() + h + 1, v.letters().end()), n);
    product = multiply(product, v);
  }
  std::vector<Letter> tword;
  for (int i = 1; i <= n; ++i) tword.push_back(i);
  if (product != FreeWord(tword, n))
    throw TupleError(TupleError::ProductLawViolated,
                     "images do not fix the product t_1...t_n");
  diff_.assign(n + 1, FreeWord(n));
  for (int i = 0; i <= n; ++i)
    diff_[i] = multiply(conj_[i], invert(conj_[i + 1]));
}

BraidAutomorphism BraidAutomorphism::from_images(std::vector<FreeWord> images) {
  BraidAutomorphism a;
  a.images_ = std::move(images);
  a.decompose();
  return a;
}

bool BraidAutomorphism::is_identity() const {
  for (int i = 1; i <= rank(); ++i) {
    const FreeWord& v = image(i);
    if (v.size() != 1 || v.at(0) != i) return false;
  }
  return true;
}

long long BraidAutomorphism::norm() const {
  long long s = 0;
  for (const FreeWord& v : images_) s += static_cast<long long>(v.size());
  return s;
}

BraidAutomorphism compose(const BraidAutomorphism& phi, const BraidAutomorphism& psi) {
  if (phi.rank() != psi.rank())
    throw std::domain_error("rank mismatch in composition");
  std::vector<FreeWord> images;
  images.reserve(phi.rank());
  for (int i = 1; i <= phi.rank(); ++i)
    images.push_back(apply_tuple(phi.image(i), psi.images()));
  return BraidAutomorphism::from_images(std::move(images));
}

BraidAutomorphism prefix_gen(int i, int sign, const BraidAutomorphism& phi) {
  std::vector<FreeWord> images = phi.images();
  // the two moved rows: t_j^{sigma_i phi} = (t_j^{sigma_i})^phi
  if (sign > 0) {
    images[i - 1] = phi.image(i + 1);
    images[i] = conjugate(phi.image(i), phi.image(i + 1));
  } else {
    images[i - 1] = conjugate(phi.image(i + 1), invert(phi.image(i)));
    images[i] = phi.image(i);
  }
  return BraidAutomorphism::from_images(std::move(images));
}

BraidWord recover_braid_word(const BraidAutomorphism& a) {
  int n = a.rank();
  BraidAutomorphism cur = a;
  std::vector<int> prefixed;
  while (!cur.is_identity()) {
    int choice = 0;
    for (int i = 1; i <= n - 1 && choice == 0; ++i) {
      const FreeWord& u = cur.difference(i);
      if (ends_with(u, FreeWord({-cur.permutation(i + 1)}, n)))
        choice = i;
      else if (begins_with(u, FreeWord({-cur.permutation(i)}, n)))
        choice = -i;
    }
    if (choice == 0)
      throw NoReducingGenerator("no reducing generator for a nonidentity tuple");
    cur = prefix_gen(choice < 0 ? -choice : choice, choice < 0 ? -1 : +1, cur);
    prefixed.push_back(choice);
  }
  // g_k ... g_1 a = 1, so a = g_1^-1 ... g_k^-1
  std::vector<int> fs;
  fs.reserve(prefixed.size());
  for (int g : prefixed) fs.push_back(-g);
  return BraidWord(n, std::move(fs));
}

std::vector<FreeWord> zeta(int n) {
  std::vector<FreeWord> images;
  for (int k = 1; k <= n; ++k) {
    std::vector<Letter> raw;
    for (int j = 1; j <= k - 1; ++j) raw.push_back(j);
    raw.push_back(-k);
    for (int j = k - 1; j >= 1; --j) raw.push_back(-j);
    images.push_back(FreeWord(std::move(raw), n));
  }
  return images;
}

std::vector<FreeWord> xi(int n) {
  std::vector<FreeWord> images;
  for (int j = 1; j <= n; ++j)
    images.push_back(FreeWord({-(n + 1 - j)}, n));
  return images;
}

SemidirectElement sd_identity(int n) {
  return SemidirectElement{BraidWord(n), FreeWord(n)};
}

SemidirectElement sd_multiply(const SemidirectElement& p, const SemidirectElement& q) {
  if (p.braid.strands != q.braid.strands)
    throw std::domain_error("strand count mismatch in semidirect product");
  return SemidirectElement{concat(p.braid, q.braid),
                           multiply(apply_braid(p.word, q.braid), q.word)};
}

SemidirectElement sd_invert(const SemidirectElement& p) {
  BraidWord ib = invert(p.braid);
  return SemidirectElement{ib, invert(apply_braid(p.word, ib))};
}

SemidirectElement sd_conjugate(const SemidirectElement& a, const SemidirectElement& g) {
  return sd_multiply(sd_multiply(sd_invert(g), a), g);
}

bool sd_equal(const SemidirectElement& p, const SemidirectElement& q) {
  return p.word == q.word &&
         BraidAutomorphism::of(p.braid) == BraidAutomorphism::of(q.braid);
}

namespace {

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  return BraidAutomorphism::of(a) == BraidAutomorphism::of(b);
}

BraidWord gen_word(int n, std::initializer_list<int> fs) {
  return BraidWord(n, std::vector<int>(fs));
}

}  // namespace

RelationReport check_relations(int n) {
  if (n < 2) throw std::domain_error("check_relations needs n >= 2");
  RelationReport rep;
  for (int i = 1; i + 2 <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rep.require(braids_equal(gen_word(n, {i, j}), gen_word(n, {j, i})),
                  "sigma_" + std::to_string(i) + " sigma_" + std::to_string(j) +
                      " = sigma_" + std::to_string(j) + " sigma_" + std::to_string(i));
  for (int i = 1; i <= n - 2; ++i)
    rep.require(
        braids_equal(gen_word(n, {i, i + 1, i}), gen_word(n, {i + 1, i, i + 1})),
        "sigma_" + std::to_string(i) + " sigma_" + std::to_string(i + 1) +
            " sigma_" + std::to_string(i) + " braid relation");
  // In B_{n+1}: sigma_n conjugated by (sigma_{n-1}...sigma_i)^-1 equals
  // sigma_i conjugated by sigma_{i+1}...sigma_n.
  for (int i = 1; i <= n; ++i) {
    std::vector<int> down, up;
    for (int j = n - 1; j >= i; --j) down.push_back(-j);
    for (int j = i + 1; j <= n; ++j) up.push_back(j);
    BraidWord lhs = conjugate(BraidWord(n + 1, {n}), BraidWord(n + 1, down));
    BraidWord rhs = conjugate(BraidWord(n + 1, {i}), BraidWord(n + 1, up));
    rep.require(braids_equal(lhs, rhs),
                "sigma_n^{(sigma_{n-1}..sigma_" + std::to_string(i) +
                    ")^-1} = sigma_" + std::to_string(i) +
                    "^{sigma_" + std::to_string(i + 1) + "..sigma_n}");
  }
  // The images of the punctured-disc generators stabilize [t_{n+1}]:
  // sigma_1..sigma_{n-1} and (sigma_i^-2)^{sigma_{i+1}..sigma_n}.
  for (int i = 1; i <= n - 1; ++i) {
    auto a = BraidAutomorphism::of(BraidWord(n + 1, {i}));
    rep.require(a.permutation(n + 1) == n + 1,
                "sigma_" + std::to_string(i) + " fixes [t_" + std::to_string(n + 1) + "]");
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> up;
    for (int j = i + 1; j <= n; ++j) up.push_back(j);
    BraidWord g = conjugate(BraidWord(n + 1, {-i, -i}), BraidWord(n + 1, up));
    auto a = BraidAutomorphism::of(g);
    rep.require(a.permutation(n + 1) == n + 1,
                "(sigma_" + std::to_string(i) + "^-2)^{sigma_" +
                    std::to_string(i + 1) + "..sigma_n} fixes [t_" +
                    std::to_string(n + 1) + "]");
  }
  return rep;
}

}  // namespace braid
