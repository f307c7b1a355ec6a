#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "braid/words.hpp"

namespace braid {

/// A word in the Artin generators of the n-string braid group: +i encodes
/// sigma_i and -i its inverse, 1 <= i <= n-1.
struct BraidWord {
  int strands = 0;
  std::vector<int> factors;

  BraidWord() = default;
  explicit BraidWord(int n) : strands(n) {}
  BraidWord(int n, std::vector<int> fs);

  std::size_t length() const { return factors.size(); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.factors == b.factors;
  }
};

BraidWord invert(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);
// a^g = g^-1 a g
BraidWord conjugate(const BraidWord& a, const BraidWord& g);

std::string format_braid(const BraidWord& b);
BraidWord parse_braid(const std::string& text, int strands);

// One Artin generator acting on a word: sign +1 applies sigma_i
// (t_i -> t_{i+1}, t_{i+1} -> t_{i+1}^-1 t_i t_{i+1}), sign -1 applies the
// inverse (t_i -> t_i t_{i+1} t_i^-1, t_{i+1} -> t_i).
FreeWord apply_gen(const FreeWord& w, int i, int sign);
// Left-to-right application of the factors: w^{phi psi} = (w^phi)^psi.
FreeWord apply_braid(const FreeWord& w, const BraidWord& b);

// Substitution by an arbitrary endomorphism tuple (images[i-1] = image of
// t_i); used for the reflections zeta and xi, which are not braids.
FreeWord apply_tuple(const FreeWord& w, const std::vector<FreeWord>& images);
std::vector<FreeWord> compose_tuples(const std::vector<FreeWord>& a,
                                     const std::vector<FreeWord>& b);

struct TupleError : std::domain_error {
  enum Kind { NotConjugateToGenerator, NotPermutation, ProductLawViolated };
  Kind kind;
  TupleError(Kind k, const std::string& msg) : std::domain_error(msg), kind(k) {}
};

/// A braid automorphism presented by its generator images, together with
/// the cached decomposition t_i^phi = t_{i^pi}^{w_i},
/// u_i = w_i w_{i+1}^-1.  Everything downstream (Artin recovery, the
/// trichotomy, the nonpositive rewriting) consumes the cached pieces.
class BraidAutomorphism {
public:
  static BraidAutomorphism of(const BraidWord& b);
  static BraidAutomorphism identity(int n);
  // Validates that the images describe a braid: each image conjugate to a
  // generator, the induced index map a bijection, and the product law
  // image(t_1)...image(t_n) = t_1...t_n.  Throws TupleError otherwise.
  static BraidAutomorphism from_images(std::vector<FreeWord> images);

  int rank() const { return static_cast<int>(images_.size()); }
  bool is_identity() const;

  const FreeWord& image(int i) const { return images_[i - 1]; }       // t_i^phi
  const std::vector<FreeWord>& images() const { return images_; }
  int permutation(int i) const { return pi_[i - 1]; }                 // i^pi
  const FreeWord& conjugator(int i) const { return conj_[i]; }        // w_i, 0..n+1
  const FreeWord& difference(int i) const { return diff_[i]; }        // u_i, 0..n

  long long norm() const;

  friend bool operator==(const BraidAutomorphism& a, const BraidAutomorphism& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const BraidAutomorphism& a, const BraidAutomorphism& b) {
    return !(a == b);
  }

private:
  BraidAutomorphism() = default;
  void decompose();

  std::vector<FreeWord> images_;
  std::vector<int> pi_;
  std::vector<FreeWord> conj_;
  std::vector<FreeWord> diff_;
};

// phi then psi.
BraidAutomorphism compose(const BraidAutomorphism& phi, const BraidAutomorphism& psi);
// sigma_i^sign then phi, the norm-descent step of Artin's algorithm.
BraidAutomorphism prefix_gen(int i, int sign, const BraidAutomorphism& phi);

struct NoReducingGenerator : std::domain_error {
  using std::domain_error::domain_error;
};

// Artin's algorithm: a braid word inducing exactly this automorphism, of
// length at most (norm - n)/2.
BraidWord recover_braid_word(const BraidAutomorphism& a);

// The reflections: zeta sends t_k to the conjugate of t_k^-1 by
// t_{k-1}^-1 ... t_1^-1, xi sends t_j to t_{n+1-j}^-1.  Both are
// involutions lying outside the braid group.
std::vector<FreeWord> zeta(int n);
std::vector<FreeWord> xi(int n);

/// Element of the semidirect product B_n x| F_n: a braid part and a word
/// part, with (phi,u)(psi,v) = (phi psi, u^psi v).
struct SemidirectElement {
  BraidWord braid;
  FreeWord word;
};

SemidirectElement sd_identity(int n);
SemidirectElement sd_multiply(const SemidirectElement& p, const SemidirectElement& q);
SemidirectElement sd_invert(const SemidirectElement& p);
SemidirectElement sd_conjugate(const SemidirectElement& a, const SemidirectElement& g);
bool sd_equal(const SemidirectElement& p, const SemidirectElement& q);

/// Collects named identity checks and the ones that failed.
struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void require(bool holds, const std::string& name) {
    ++checked;
    if (!holds) failures.push_back(name);
  }
};

// Far commutation and braid relations in B_n, the conjugation identity
// sigma_n^{(sigma_{n-1}...sigma_i)^-1} = sigma_i^{sigma_{i+1}...sigma_n}
// in B_{n+1}, and the [t_{n+1}]-stabilizer membership of
// (sigma_i^-2)^{sigma_{i+1}...sigma_n}.
RelationReport check_relations(int n);

}  // namespace braid
