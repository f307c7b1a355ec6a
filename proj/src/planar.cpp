#include "braid/planar.hpp"

#include <algorithm>
#include <map>

namespace braid {

int label_rank(Letter a, int n) {
  (void)n;
  int i = letter_index(a);
  return a > 0 ? 2 * i - 1 : 2 * i;
}

int zbar_rank() { return 0; }
int z_rank(int n) { return 2 * n + 1; }

std::string label_name(int rank, int n) {
  if (rank == 0) return "-z1";
  if (rank == 2 * n + 1) return "z1";
  int i = (rank + 1) / 2;
  return rank % 2 == 1 ? "t" + std::to_string(i) : "-t" + std::to_string(i);
}

std::vector<int> whitehead_expansion(const FreeWord& w) {
  int n = w.rank();
  std::vector<int> out;
  out.reserve(2 * w.size() + 2);
  out.push_back(zbar_rank());
  for (Letter a : w.letters()) {
    out.push_back(label_rank(a, n));
    out.push_back(label_rank(-a, n));
  }
  out.push_back(z_rank(n));
  return out;
}

namespace {

// Backtracking arc-insertion: trace points are laid on the line one at a
// time; a point may enter any gap that keeps the labels weakly monotone
// and whose connecting semicircle crosses no earlier arc in the same
// half-plane.
struct InsertionSearch {
  const std::vector<int>& expansion;
  std::vector<int> line;    // trace indices in line order
  std::vector<int> pos_of;  // trace index -> slot in line

  explicit InsertionSearch(const std::vector<int>& e)
      : expansion(e), pos_of(e.size(), -1) {}

  bool labels_ok(std::size_t gap, int rank) const {
    if (gap > 0 && expansion[line[gap - 1]] > rank) return false;
    if (gap < line.size() && rank > expansion[line[gap]]) return false;
    return true;
  }

  // Would the arc from trace j-1 to a new point in `gap` cross an
  // existing arc of the same half-plane?
  bool crosses(std::size_t j, std::size_t gap) const {
    auto shifted = [&](int idx) {
      return idx < static_cast<int>(gap) ? idx : idx + 1;
    };
    int pa = shifted(pos_of[j - 1]);
    int pb = static_cast<int>(gap);
    int lo = std::min(pa, pb), hi = std::max(pa, pb);
    // arcs (k-1,k) with k of the same parity as j share the half-plane
    for (std::size_t k = j % 2 == 1 ? 1 : 2; k < j; k += 2) {
      int qa = shifted(pos_of[k - 1]);
      int qb = shifted(pos_of[k]);
      bool ina = lo < qa && qa < hi;
      bool inb = lo < qb && qb < hi;
      if (ina != inb) return true;
    }
    return false;
  }

  bool place(std::size_t j) {
    if (j == expansion.size()) return true;
    for (std::size_t gap = 0; gap <= line.size(); ++gap) {
      if (!labels_ok(gap, expansion[j])) continue;
      if (crosses(j, gap)) continue;
      line.insert(line.begin() + gap, static_cast<int>(j));
      for (std::size_t t = gap; t < line.size(); ++t) pos_of[line[t]] = static_cast<int>(t);
      if (place(j + 1)) return true;
      line.erase(line.begin() + gap);
      for (std::size_t t = gap; t < line.size(); ++t) pos_of[line[t]] = static_cast<int>(t);
    }
    return false;
  }
};

PlanarEmbedding build_embedding(const FreeWord& w, const std::vector<int>& expansion,
                                const std::vector<int>& pos_of) {
  PlanarEmbedding emb;
  emb.rank = w.rank();
  std::size_t len = expansion.size();
  emb.labels.resize(len);
  emb.pi.resize(len);
  for (std::size_t j = 0; j < len; ++j) {
    emb.labels[pos_of[j]] = expansion[j];
    emb.pi[j] = pos_of[j] + 1;
  }
  for (std::size_t j = 1; j < len; j += 2)
    emb.upper.emplace_back(pos_of[j - 1] + 1, pos_of[j] + 1);
  for (std::size_t j = 2; j < len; j += 2)
    emb.lower.emplace_back(pos_of[j - 1] + 1, pos_of[j] + 1);
  return emb;
}

}  // namespace

std::optional<PlanarEmbedding> is_planar(const FreeWord& w) {
  std::vector<int> expansion = whitehead_expansion(w);
  InsertionSearch search(expansion);
  search.line.push_back(0);
  search.pos_of[0] = 0;
  if (!search.place(1)) return std::nullopt;
  return build_embedding(w, expansion, search.pos_of);
}

bool planar_oracle(const FreeWord& w) {
  if (w.size() > 6)
    throw std::domain_error("planar_oracle is capped at length 6");
  std::vector<int> expansion = whitehead_expansion(w);
  std::size_t len = expansion.size();
  std::vector<int> sorted = expansion;
  std::sort(sorted.begin(), sorted.end());

  // positions grouped by label rank
  std::map<int, std::vector<int>> slots;
  for (std::size_t p = 0; p < len; ++p) slots[sorted[p]].push_back(static_cast<int>(p));
  // trace indices grouped the same way, with a permutation odometer
  std::map<int, std::vector<int>> members;
  for (std::size_t j = 0; j < len; ++j) members[expansion[j]].push_back(static_cast<int>(j));
  std::map<int, std::vector<int>> perm;
  for (auto& [rank, v] : members) {
    perm[rank].resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) perm[rank][i] = static_cast<int>(i);
  }

  std::vector<int> pos(len);
  while (true) {
    for (auto& [rank, mem] : members)
      for (std::size_t i = 0; i < mem.size(); ++i)
        pos[mem[i]] = slots[rank][perm[rank][i]];
    bool ok = true;
    for (std::size_t half = 1; half <= 2 && ok; ++half) {
      std::vector<std::pair<int, int>> arcs;
      for (std::size_t j = half; j < len; j += 2) {
        int a = pos[j - 1], b = pos[j];
        arcs.emplace_back(std::min(a, b), std::max(a, b));
      }
      for (std::size_t x = 0; x < arcs.size() && ok; ++x)
        for (std::size_t y = x + 1; y < arcs.size() && ok; ++y) {
          auto [a1, b1] = arcs[x];
          auto [a2, b2] = arcs[y];
          bool in2a = a1 < a2 && a2 < b1;
          bool in2b = a1 < b2 && b2 < b1;
          if (in2a != in2b) ok = false;
        }
    }
    if (ok) return true;
    // odometer step over the per-rank permutations
    auto it = perm.begin();
    for (; it != perm.end(); ++it) {
      if (std::next_permutation(it->second.begin(), it->second.end())) break;
    }
    if (it == perm.end()) return false;
  }
}

std::string emit_diagram(const PlanarEmbedding& emb) {
  const int unit = 40, margin = 50, base = 220;
  int count = static_cast<int>(emb.labels.size());
  int width = 2 * margin + unit * (count - 1);
  auto x_of = [&](int pos) { return margin + unit * (pos - 1); };
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(2 * base) +
         "\" font-family=\"monospace\" font-size=\"14\">\n";
  svg += "<line x1=\"" + std::to_string(margin - 20) + "\" y1=\"" +
         std::to_string(base) + "\" x2=\"" + std::to_string(width - margin + 20) +
         "\" y2=\"" + std::to_string(base) +
         "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  auto arc_path = [&](int p, int q, bool upper) {
    int a = std::min(p, q), b = std::max(p, q);
    int r = (x_of(b) - x_of(a)) / 2;
    return "<path d=\"M " + std::to_string(x_of(a)) + " " + std::to_string(base) +
           " A " + std::to_string(r) + " " + std::to_string(r) + " 0 0 " +
           (upper ? "1" : "0") + " " + std::to_string(x_of(b)) + " " +
           std::to_string(base) + "\" fill=\"none\" stroke=\"black\"/>\n";
  };
  for (auto [p, q] : emb.upper) svg += arc_path(p, q, true);
  for (auto [p, q] : emb.lower) svg += arc_path(p, q, false);
  for (int pos = 1; pos <= count; ++pos) {
    svg += "<circle cx=\"" + std::to_string(x_of(pos)) + "\" cy=\"" +
           std::to_string(base) + "\" r=\"3\"/>\n";
    svg += "<text x=\"" + std::to_string(x_of(pos)) + "\" y=\"" +
           std::to_string(base + 24) + "\" text-anchor=\"middle\">" +
           label_name(emb.labels[pos - 1], emb.rank) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::optional<OrbitReduction> orbit_reduce(const FreeWord& w0) {
  int n = w0.rank();
  if (!is_planar(w0)) return std::nullopt;
  FreeWord w = w0;
  BraidWord witness(n);
  long long guard = static_cast<long long>(n + 1) * (w0.size() + 1) + 4;
  while (true) {
    int i = 0;
    while (i < static_cast<int>(w.size()) && i < n && w.at(i) == i + 1) ++i;
    if (i == static_cast<int>(w.size()))
      return OrbitReduction{i, witness};
    Letter x = w.at(i);
    int j = letter_index(x);
    std::vector<int> fs;
    if (j <= i - 1) {
      for (int s = j; s <= i - 1; ++s) fs.push_back(s);
    } else if (j >= i + 2) {
      for (int s = j - 1; s >= i + 1; --s) fs.push_back(-s);
    } else {
      // t_i, t_i^-1, t_{i+1} and t_{i+1}^-1 continuations are all ruled
      // out for reduced planar prefixes
      throw std::logic_error("orbit_reduce hit an impossible continuation");
    }
    BraidWord phi(n, fs);
    w = apply_braid(w, phi);
    witness = concat(witness, phi);
    if (--guard < 0)
      throw std::logic_error("orbit_reduce failed to make progress");
  }
}

std::optional<BraidWord> t1_orbit_witness(const FreeWord& w) {
  if (w.rank() < 1) throw std::domain_error("rank must be at least 1");
  auto red = orbit_reduce(w);
  bool via_reduction = red && red->k == 1;
  // the cyclic-core criterion must agree
  CyclicReduction cr = cyclic_reduce(w);
  bool core_is_generator = cr.core.size() == 1 && cr.core.at(0) > 0;
  bool via_criterion = core_is_generator && is_planar(w).has_value();
  if (via_reduction != via_criterion)
    throw std::logic_error("orbit membership criteria disagree");
  if (!via_reduction) return std::nullopt;
  return red->witness;
}

namespace {

FreeWord shift_down(const FreeWord& w, int d) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (Letter a : w.letters())
    raw.push_back(a > 0 ? a - d : a + d);
  return FreeWord(std::move(raw), w.rank() - d);
}

BraidWord shift_up(const BraidWord& b, int d, int strands) {
  std::vector<int> fs;
  fs.reserve(b.factors.size());
  for (int f : b.factors) fs.push_back(f > 0 ? f + d : f - d);
  return BraidWord(strands, std::move(fs));
}

}  // namespace

std::optional<BraidWord> tuple_orbit_witness(const std::vector<FreeWord>& ws) {
  if (ws.empty()) throw std::domain_error("empty tuple");
  int n = ws[0].rank();
  int k = static_cast<int>(ws.size());
  if (k > n) throw std::domain_error("tuple longer than the rank");
  std::vector<FreeWord> cur = ws;
  BraidWord total(n);
  for (int stage = 0; stage < k; ++stage) {
    // every remaining word must lie in <t_{stage+1}..t_n>; sub-braid
    // groups never leave that subgroup
    for (Letter a : cur[stage].letters())
      if (letter_index(a) <= stage) return std::nullopt;
    auto wit = t1_orbit_witness(shift_down(cur[stage], stage));
    if (!wit) return std::nullopt;
    BraidWord lifted = shift_up(*wit, stage, n);
    for (int t = stage; t < k; ++t) cur[t] = apply_braid(cur[t], lifted);
    total = concat(total, lifted);
    if (!(cur[stage].size() == 1 && cur[stage].at(0) == stage + 1))
      throw std::logic_error("stage witness failed to normalize its word");
  }
  return total;
}

}  // namespace braid
