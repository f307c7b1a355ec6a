#include "braid/dehornoy.hpp"

namespace braid {

const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Neutral: return "NEUTRAL";
    case Trichotomy::Negative: return "NEGATIVE";
    case Trichotomy::Positive: return "POSITIVE";
  }
  return "?";
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "LT";
    case Ordering::Equal: return "EQ";
    case Ordering::Greater: return "GT";
  }
  return "?";
}

Trichotomy classify_sigma1(const BraidAutomorphism& a) {
  const FreeWord& v = a.image(1);
  if (v.size() == 1 && v.at(0) == 1) return Trichotomy::Neutral;
  if (!v.empty() && v.at(0) == 1) return Trichotomy::Negative;
  return Trichotomy::Positive;
}

BraidWord sigma1_nonpositive_form(const BraidWord& b) {
  int n = b.strands;
  BraidAutomorphism cur = BraidAutomorphism::of(b);
  if (classify_sigma1(cur) == Trichotomy::Positive)
    throw PositiveInput("braid is sigma_1-positive");
  std::vector<int> prefixed;
  while (!cur.is_identity()) {
    int choice = 0;
    for (int i = 1; i <= n - 1 && choice == 0; ++i) {
      const FreeWord& u = cur.difference(i);
      if (ends_with(u, FreeWord({-cur.permutation(i + 1)}, n)))
        choice = i;
      else if (i >= 2 && begins_with(u, FreeWord({-cur.permutation(i)}, n)))
        choice = -i;
    }
    if (choice == 0)
      throw NoReducingGenerator("descent stalled on a nonidentity braid");
    cur = prefix_gen(choice < 0 ? -choice : choice, choice < 0 ? -1 : +1, cur);
    prefixed.push_back(choice);
  }
  std::vector<int> fs;
  fs.reserve(prefixed.size());
  for (int g : prefixed) fs.push_back(-g);
  return BraidWord(n, std::move(fs));
}

int main_index(const BraidAutomorphism& a) {
  if (a.is_identity()) throw IdentityInput("main_index of the identity");
  for (int i = 1; i <= a.rank(); ++i) {
    const FreeWord& v = a.image(i);
    if (!(v.size() == 1 && v.at(0) == i)) return i;
  }
  return a.rank();  // unreachable for a nonidentity braid
}

Ordering compare(const BraidWord& x, const BraidWord& y) {
  if (x.strands != y.strands)
    throw std::domain_error("strand count mismatch in compare");
  BraidAutomorphism rho = BraidAutomorphism::of(concat(x, invert(y)));
  if (rho.is_identity()) return Ordering::Equal;
  int i = main_index(rho);
  const FreeWord& v = rho.image(i);
  bool begins_ti = !v.empty() && v.at(0) == i;
  return begins_ti ? Ordering::Less : Ordering::Greater;
}

}  // namespace braid
