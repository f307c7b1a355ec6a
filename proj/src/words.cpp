#include "braid/words.hpp"

#include <sstream>
#include <stdexcept>

namespace braid {

namespace {

void check_letter(Letter a, int rank) {
  int i = letter_index(a);
  if (a == 0 || i < 1 || i > rank)
    throw std::domain_error("letter index " + std::to_string(a) +
                            " out of range for rank " + std::to_string(rank));
}

std::vector<Letter> stack_reduce(const std::vector<Letter>& raw, int rank) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter a : raw) {
    check_letter(a, rank);
    if (!out.empty() && out.back() == -a)
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> raw, int rank)
    : letters_(stack_reduce(raw, rank)), rank_(rank) {}

FreeWord FreeWord::generator(int i, int rank) {
  return FreeWord({i}, rank);
}

FreeWord reduce(const std::vector<Letter>& raw, int rank) {
  return FreeWord(raw, rank);
}

static void require_same_rank(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank())
    throw std::domain_error("rank mismatch: " + std::to_string(a.rank()) +
                            " vs " + std::to_string(b.rank()));
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  require_same_rank(a, b);
  std::vector<Letter> raw = a.letters();
  for (Letter x : b.letters()) {
    if (!raw.empty() && raw.back() == -x)
      raw.pop_back();
    else
      raw.push_back(x);
  }
  FreeWord out;
  out = FreeWord(std::move(raw), a.rank());
  return out;
}

FreeWord invert(const FreeWord& a) {
  std::vector<Letter> raw;
  raw.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    raw.push_back(-*it);
  return FreeWord(std::move(raw), a.rank());
}

FreeWord conjugate(const FreeWord& a, const FreeWord& g) {
  return multiply(multiply(invert(g), a), g);
}

CyclicReduction cyclic_reduce(const FreeWord& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  std::vector<Letter> conj;
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    conj.push_back(ls[hi - 1]);
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.core = FreeWord(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi), w.rank());
  // peeled letters were collected outermost-last; the conjugator reads
  // innermost-to-outermost left to right
  r.conjugator = FreeWord(std::vector<Letter>(conj.rbegin(), conj.rend()), w.rank());
  return r;
}

bool begins_with(const FreeWord& w, const FreeWord& p) {
  require_same_rank(w, p);
  if (p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (w.at(i) != p.at(i)) return false;
  return true;
}

bool ends_with(const FreeWord& w, const FreeWord& p) {
  require_same_rank(w, p);
  if (p.size() > w.size()) return false;
  std::size_t off = w.size() - p.size();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (w.at(off + i) != p.at(i)) return false;
  return true;
}

bool is_squarefree(const FreeWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.at(i) == w.at(i - 1)) return false;
  return true;
}

FreeWord z1(int n) {
  if (n < 1) throw std::domain_error("z1 needs rank >= 1");
  std::vector<Letter> raw;
  for (int i = n; i >= 1; --i) raw.push_back(-i);
  return FreeWord(std::move(raw), n);
}

std::string format_word(const FreeWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.at(i));
  }
  return out;
}

FreeWord parse_word(const std::string& text, int rank) {
  std::vector<Letter> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::domain_error("bad word token '" + tok + "'");
    }
    if (used != tok.size())
      throw std::domain_error("bad word token '" + tok + "'");
    raw.push_back(v);
  }
  return FreeWord(std::move(raw), rank);
}

}  // namespace braid
