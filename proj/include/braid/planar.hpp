#pragma once

#include <optional>
#include <string>

#include "braid/braids.hpp"

namespace braid {

// The ordered label alphabet z_1^-1 < t_1 < t_1^-1 < ... < t_n < t_n^-1 < z_1
// encoded as ranks 0, 2i-1, 2i, 2n+1.
int label_rank(Letter a, int n);
int zbar_rank();
int z_rank(int n);
std::string label_name(int rank, int n);

// (z_1^-1, a_1, a_1^-1, ..., a_m, a_m^-1, z_1) as a rank sequence of
// length 2|w| + 2.
std::vector<int> whitehead_expansion(const FreeWord& w);

/// A crossing-free alternating arc diagram for a Whitehead expansion:
/// points on a line with weakly increasing labels, upper arcs joining the
/// (2i-1, 2i) trace pairs and lower arcs the (2i, 2i+1) pairs, each family
/// nested.
struct PlanarEmbedding {
  int rank = 0;
  std::vector<int> labels;                    // label rank at position 1..2M (0-based)
  std::vector<int> pi;                        // trace index j -> position (1-based)
  std::vector<std::pair<int, int>> upper;     // position pairs
  std::vector<std::pair<int, int>> lower;
};

std::optional<PlanarEmbedding> is_planar(const FreeWord& w);

// Exhaustive per-label assignment search; an independent check for words
// of length at most 6.
bool planar_oracle(const FreeWord& w);

// Deterministic SVG, byte-identical for equal input.
std::string emit_diagram(const PlanarEmbedding& emb);

struct OrbitReduction {
  int k = 0;
  BraidWord witness;  // apply_braid(w, witness) == t_1 ... t_k
};

// Reduction of a planar word to its orbit representative t_1...t_k, with
// the braid that realizes it; nullopt when the word is not planar.
std::optional<OrbitReduction> orbit_reduce(const FreeWord& w);

// A braid carrying w to t_1, when w lies in the orbit of t_1.
std::optional<BraidWord> t1_orbit_witness(const FreeWord& w);

// A braid carrying the tuple to (t_1, ..., t_k), when one exists.
std::optional<BraidWord> tuple_orbit_witness(const std::vector<FreeWord>& ws);

}  // namespace braid
