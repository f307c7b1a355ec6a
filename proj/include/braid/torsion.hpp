#pragma once

#include <optional>
#include <utility>

#include "braid/braids.hpp"

namespace braid {

/// Normal form in the free product C_m * ... * C_m (n factors): syllables
/// (generator index, exponent mod m) with adjacent indices distinct and
/// exponents in [1..m-1].
class TorsionWord {
public:
  using Syllable = std::pair<int, int>;

  TorsionWord() = default;
  TorsionWord(int modulus, int rank) : modulus_(modulus), rank_(rank) {}
  TorsionWord(int modulus, int rank, std::vector<Syllable> raw);

  static TorsionWord generator(int i, int modulus, int rank);

  int modulus() const { return modulus_; }
  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syll_; }
  bool empty() const { return syll_.empty(); }
  std::size_t syllable_count() const { return syll_.size(); }

  friend bool operator==(const TorsionWord& a, const TorsionWord& b) {
    return a.modulus_ == b.modulus_ && a.rank_ == b.rank_ && a.syll_ == b.syll_;
  }
  friend bool operator!=(const TorsionWord& a, const TorsionWord& b) {
    return !(a == b);
  }

private:
  int modulus_ = 2;
  int rank_ = 0;
  std::vector<Syllable> syll_;
};

TorsionWord tw_multiply(const TorsionWord& a, const TorsionWord& b);
TorsionWord tw_invert(const TorsionWord& a);
TorsionWord tw_conjugate(const TorsionWord& a, const TorsionWord& g);
TorsionWord tw_power(const TorsionWord& a, int e);

// Syllable length |tau^k|: 2k for representatives k in [0..floor(m/2)],
// -2k-1 for k in [-1..-floor((m-1)/2)], summed over the normal form.
long long tw_length(const TorsionWord& w);

// t_i -> tau_i, exponents renormalized mod m.
TorsionWord project(const FreeWord& w, int modulus);

TorsionWord tw_apply_gen(const TorsionWord& w, int i, int sign);
TorsionWord tw_apply_braid(const TorsionWord& w, const BraidWord& b);

// Humphries' descent: recovers the unique braid inducing the given images
// of tau_1..tau_n.  Throws TupleError when the tuple fails validation and
// NoReducingGenerator when the descent stalls (tuple not induced by a
// braid).
BraidWord tw_recover_braid(const std::vector<TorsionWord>& images);

std::string format_torsion(const TorsionWord& w);
TorsionWord parse_torsion(const std::string& text, int modulus, int rank);

/// Element of Phi_n, the even-exponent-sum subgroup of C_2^{*(n+1)}; a
/// free group of rank n carrying the B_{n+1}-action.
struct PhiElement {
  TorsionWord word;
  explicit PhiElement(TorsionWord w);
};

// The four free generating sets of Phi_n used by the Wada actions.
std::vector<PhiElement> phi_basis(int variant, int n);

struct NotInSubgroup : std::domain_error {
  using std::domain_error::domain_error;
};

/// Stallings folding over a free group, with enough history to express
/// members as words in the given generators.
class SubgroupFolder {
public:
  // generators over the ambient free group of rank `ambient_rank`
  SubgroupFolder(std::vector<FreeWord> generators, int ambient_rank);

  // expression of w as a word over the generators, or nullopt when w lies
  // outside the subgroup; the expression has rank = number of generators
  std::optional<FreeWord> express(const FreeWord& w) const;

private:
  struct Edge {
    int a, b;            // traversing a->b reads +label, b->a reads -label
    int label;
    FreeWord h;          // decoration in the free group over the generators
  };
  void fold();
  int gen_count_;
  std::vector<Edge> edges_;
  int vertex_count_ = 1;
};

// Canonical coordinates on Phi_n: the free basis tau_{n+1} tau_k.
FreeWord phi_to_free(const PhiElement& g);
PhiElement phi_from_free(const FreeWord& w, int n);

// Expression of g in the given free generating set of Phi_n.
FreeWord rewrite_in_basis(const PhiElement& g, const std::vector<PhiElement>& basis);

// Braid action transported to a word over the basis.  Variants 2..4 route
// through Phi_n (braids on n+1 strands); variant 1 is the direct action on
// a rank-n free group with twist exponent m_param (braids on n strands).
FreeWord wada_action(const FreeWord& xw, const BraidWord& b, int variant,
                     int m_param = 2);

// Verifies the genus-g surface identification: the commutator-product
// image and the commuting square between the Dehn-twist formulas and the
// braid action on C_2^{*(2g+1)}.
RelationReport surface_check(int g);

}  // namespace braid
