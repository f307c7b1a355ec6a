#pragma once

#include "braid/braids.hpp"

namespace braid {

enum class Trichotomy { Neutral, Negative, Positive };
enum class Ordering { Less, Equal, Greater };

const char* to_string(Trichotomy t);
const char* to_string(Ordering o);

// The sigma_1-trichotomy read off the image of t_1: Neutral iff it equals
// t_1, Negative iff it begins with t_1 but is longer, Positive otherwise.
Trichotomy classify_sigma1(const BraidAutomorphism& a);
inline Trichotomy classify_sigma1(const BraidWord& b) {
  return classify_sigma1(BraidAutomorphism::of(b));
}

struct PositiveInput : std::domain_error {
  using std::domain_error::domain_error;
};
struct IdentityInput : std::domain_error {
  using std::domain_error::domain_error;
};

// Rewrites a sigma_1-negative-or-neutral braid over the alphabet
// sigma_2..sigma_{n-1}, sigma_1^-1..sigma_{n-1}^-1, with length at most
// n 2^|b| - n.  A neutral input yields a word avoiding index 1 entirely.
// Throws PositiveInput when t_1^b does not begin with t_1.
BraidWord sigma1_nonpositive_form(const BraidWord& b);

// Largest i such that t_1,...,t_{i-1} are all fixed; the index at which
// the shifted trichotomy decides the sign of the braid.
int main_index(const BraidAutomorphism& a);

// The Dehornoy right-order: with rho = x y^-1, Greater iff the t_i image
// of rho avoids the prefix t_i at i = main_index(rho).
Ordering compare(const BraidWord& x, const BraidWord& y);

}  // namespace braid
