#include "braid/ends.hpp"

#include <numeric>

namespace braid {

namespace {

// Largest proper divisor period: returns the primitive root length of a
// cyclically reduced word under literal repetition.
std::size_t primitive_root_length(const std::vector<Letter>& v) {
  std::size_t len = v.size();
  for (std::size_t p = 1; p <= len / 2; ++p) {
    if (len % p) continue;
    bool rep = true;
    for (std::size_t i = p; i < len && rep; ++i) rep = v[i] == v[i - p];
    if (rep) return p;
  }
  return len;
}

}  // namespace

End End::make(const FreeWord& prefix, const FreeWord& period) {
  if (prefix.rank() != period.rank())
    throw std::domain_error("rank mismatch between prefix and period");
  if (period.empty()) throw EmptyPeriod("period of an end must be nonempty");

  // v^infinity = (h^-1 c h)^infinity = h^-1 c^infinity as infinite words
  CyclicReduction cr = cyclic_reduce(period);
  std::vector<Letter> u =
      multiply(prefix, invert(cr.conjugator)).letters();
  std::vector<Letter> v = cr.core.letters();

  std::size_t root = primitive_root_length(v);
  v.resize(root);

  // junction cancellation: strip u's tail against v, rotating v leftward
  while (!u.empty() && u.back() == -v.front()) {
    u.pop_back();
    v.push_back(v.front());
    v.erase(v.begin());
  }
  // minimal prefix: fold u's tail into the period, rotating v rightward
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    v.insert(v.begin(), v.back());
    v.pop_back();
  }

  End e;
  e.prefix_ = FreeWord(std::move(u), prefix.rank());
  e.period_ = FreeWord(std::move(v), prefix.rank());
  return e;
}

Letter End::at(std::size_t pos) const {
  if (pos < prefix_.size()) return prefix_.at(pos);
  return period_.at((pos - prefix_.size()) % period_.size());
}

namespace {

// Position of x in the rank cycle that starts just after predecessor p
// (p = 0 when the divergence happens at the very first letter).
int order_key(Letter x, Letter p, int n) {
  int rx = x > 0 ? 2 * x - 1 : -2 * x;  // t_i -> 2i-1, t_i^-1 -> 2i
  if (p == 0) return rx - 1;
  int start = p > 0 ? 2 * p + 1 : -2 * p;  // after t_i: t_{i+1}; after t_i^-1: itself
  int m = 2 * n;
  return ((rx - start) % m + m) % m;
}

}  // namespace

Ordering compare_ends(const End& a, const End& b) {
  if (a.rank() != b.rank())
    throw std::domain_error("rank mismatch in compare_ends");
  if (a == b) return Ordering::Equal;
  std::size_t bound = std::max(a.prefix().size(), b.prefix().size()) +
                      std::lcm(a.period().size(), b.period().size());
  Letter prev = 0;
  for (std::size_t pos = 0; pos < bound; ++pos) {
    Letter x = a.at(pos), y = b.at(pos);
    if (x != y) {
      int kx = order_key(x, prev, a.rank());
      int ky = order_key(y, prev, a.rank());
      return kx < ky ? Ordering::Less : Ordering::Greater;
    }
    prev = x;
  }
  return Ordering::Equal;
}

End act_on_end(const End& e, const BraidWord& b) {
  if (e.rank() != b.strands)
    throw std::domain_error("rank mismatch in end action");
  FreeWord u = apply_braid(e.prefix(), b);
  FreeWord g = apply_braid(e.period(), b);
  CyclicReduction cr = cyclic_reduce(g);
  return End::make(multiply(u, invert(cr.conjugator)), cr.core);
}

bool end_is_squarefree(const End& e) {
  // u v v covers every adjacency, including the periodic wraparound
  std::vector<Letter> s = e.prefix().letters();
  for (int rep = 0; rep < 2; ++rep)
    s.insert(s.end(), e.period().letters().begin(), e.period().letters().end());
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) return false;
  return true;
}

Ordering thurston_compare(const BraidWord& x, const BraidWord& y) {
  if (x.strands != y.strands)
    throw std::domain_error("strand count mismatch in thurston_compare");
  int n = x.strands;
  for (int i = 1; i <= n; ++i) {
    End base = End::make(FreeWord(n), FreeWord::generator(i, n));
    Ordering o = compare_ends(act_on_end(base, x), act_on_end(base, y));
    if (o != Ordering::Equal) return o;
  }
  return Ordering::Equal;
}

std::string format_end(const End& e) {
  return format_word(e.prefix()) + " | " + format_word(e.period());
}

End parse_end(const std::string& text, int rank) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::domain_error("end format is \"u | v\"");
  FreeWord u = parse_word(text.substr(0, bar), rank);
  FreeWord v = parse_word(text.substr(bar + 1), rank);
  return End::make(u, v);
}

}  // namespace braid
