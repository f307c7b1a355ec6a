#pragma once

#include <string>
#include <utility>
#include <vector>

namespace braid {

// A letter of the free group of rank n: +i encodes t_i and -i encodes its
// inverse, with 1 <= i <= n.
using Letter = int;

inline Letter inverse(Letter a) { return -a; }
inline int letter_index(Letter a) { return a < 0 ? -a : a; }

/// Reduced word over t_1..t_n; the normal form of an element of the free
/// group of rank n.  The rank travels with the word and mixed-rank
/// arithmetic is rejected.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}

  // Free reduction of an arbitrary letter sequence.  Throws if a letter
  // index is outside [1..rank].
  FreeWord(std::vector<Letter> raw, int rank);

  static FreeWord generator(int i, int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter at(std::size_t i) const { return letters_[i]; }

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
  friend bool operator<(const FreeWord& a, const FreeWord& b) {
    return a.letters_ < b.letters_;
  }

private:
  std::vector<Letter> letters_;
  int rank_ = 0;
};

FreeWord reduce(const std::vector<Letter>& raw, int rank);
FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
// a^g = g^-1 a g
FreeWord conjugate(const FreeWord& a, const FreeWord& g);

struct CyclicReduction {
  FreeWord core;
  FreeWord conjugator;  // original = conjugate(core, conjugator)
};
CyclicReduction cyclic_reduce(const FreeWord& w);

bool begins_with(const FreeWord& w, const FreeWord& p);
bool ends_with(const FreeWord& w, const FreeWord& p);
bool is_squarefree(const FreeWord& w);

// z_1 = (t_1 ... t_n)^-1 = t_n^-1 ... t_1^-1, the boundary word.
FreeWord z1(int n);

// Text format: whitespace-separated signed indices, "e" (or "") for the
// empty word.
std::string format_word(const FreeWord& w);
FreeWord parse_word(const std::string& text, int rank);

}  // namespace braid
