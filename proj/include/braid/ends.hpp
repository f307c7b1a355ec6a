#pragma once

#include "braid/braids.hpp"
#include "braid/dehornoy.hpp"

namespace braid {

struct EmptyPeriod : std::domain_error {
  using std::domain_error::domain_error;
};

/// An eventually periodic end u v v v ... of the free group, stored in
/// canonical form: the period is cyclically reduced and primitive, there is
/// no cancellation at the junction, and the prefix is as short as possible
/// (in particular it never ends with the last letter of the period).  Two
/// ends are equal as boundary points iff they are structurally equal.
class End {
public:
  static End make(const FreeWord& prefix, const FreeWord& period);

  const FreeWord& prefix() const { return prefix_; }
  const FreeWord& period() const { return period_; }
  int rank() const { return period_.rank(); }

  // Letter at position pos (0-based) of the reduced infinite word.
  Letter at(std::size_t pos) const;

  friend bool operator==(const End& a, const End& b) {
    return a.prefix_ == b.prefix_ && a.period_ == b.period_;
  }
  friend bool operator!=(const End& a, const End& b) { return !(a == b); }

private:
  End() = default;
  FreeWord prefix_;
  FreeWord period_;
};

// The ordering of the set of ends: ranks t_1 < t_1^-1 < ... < t_n < t_n^-1
// at the start, and after a letter the circular rule that resumes the rank
// cycle just past the predecessor's inverse.  Divergence is located within
// max(|u1|,|u2|) + lcm(|v1|,|v2|) letters; agreement to that depth means
// equality.
Ordering compare_ends(const End& a, const End& b);

// Image of u v^infinity under the braid: with g = v^b = c^h cyclically
// reduced, the image is (u^b h^-1) c^infinity.
End act_on_end(const End& e, const BraidWord& b);

bool end_is_squarefree(const End& e);

// Lexicographic comparison of the tuples ((t_i^infinity)^x)_i; coincides
// with the Dehornoy order.
Ordering thurston_compare(const BraidWord& x, const BraidWord& y);

// Text format: "u | v" with both parts in word format.
std::string format_end(const End& e);
End parse_end(const std::string& text, int rank);

}  // namespace braid
