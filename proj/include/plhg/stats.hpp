#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "plhg/hypergraph.hpp"

namespace plhg {

/// Exact motif counts. Sums of C(d, 2) over pair degrees can pass 2^63 on
/// adversarial inputs, so loose-2-cycle totals are 128-bit.
__extension__ typedef unsigned __int128 Count;

std::string to_string(Count value);
/// Parses a non-negative decimal; throws Parse on anything else.
Count parse_count(const std::string& text);

struct MotifCounts {
  std::uint64_t edge_count = 0;
  /// Absent for m = 2, where a loose 2-cycle degenerates to a single edge.
  std::optional<Count> loose2_count;
  /// pair degree d (>= 1) -> number of vertex pairs with that degree.
  std::map<std::uint32_t, std::uint64_t> pair_degree_histogram;
};

std::uint64_t count_hyperedges(const Hypergraph& h);

inline constexpr std::uint64_t kBruteForceEdgeLimit = 100'000;

/// Unordered edge pairs with |e ∩ f| = 2, by pairwise intersection.
/// O(|E|^2); throws Guard above kBruteForceEdgeLimit edges and Domain for m = 2.
Count count_loose2_bruteforce(const Hypergraph& h);

/// Pair-degree formula. m = 3: sum over pairs of C(d_pair, 2).
/// m = 4: that sum minus 3 * sum over triples of C(d_triple, 2), removing
/// edge pairs that share three vertices. Throws Domain unless m in {3, 4}.
Count count_loose2_pairmap(const Hypergraph& h);

/// edge_count, loose2_count (pair map for m in {3,4}, brute force under its
/// guard for m >= 5) and the pair-degree histogram.
MotifCounts count_motifs(const Hypergraph& h);

/// Streaming pair/triple degree counter. Feeding it every edge of a
/// hypergraph yields the same totals as count_loose2_pairmap without
/// materializing the edge list. The running total is updated on each
/// increment (d -> d+1 adds d), so no final pass is needed.
class Loose2Accumulator {
 public:
  /// Pair degrees are tracked for any m >= 2; loose2() needs m in {3, 4}
  /// (and n <= 2^21 when m = 4).
  Loose2Accumulator(std::uint64_t n, int m);

  void add(std::span<const Vertex> tuple);

  std::uint64_t edges() const { return edges_; }
  Count loose2() const;
  std::map<std::uint32_t, std::uint64_t> pair_degree_histogram() const;

  /// Sum over pairs of d_pair; equals C(m,2) * edges().
  std::uint64_t pair_degree_total() const;

 private:
  void bump_pair(Vertex a, Vertex b);
  void bump_triple(Vertex a, Vertex b, Vertex c);

  std::uint64_t n_;
  int m_;
  std::uint64_t edges_ = 0;
  Count pair_sum_ = 0;
  Count triple_sum_ = 0;
  // Dense triangular array indexed by b(b-1)/2 + a for a < b when it fits,
  // otherwise a hash map keyed by the packed pair a*n + b.
  std::vector<std::uint32_t> dense_pairs_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_pairs_;
  std::unordered_map<std::uint64_t, std::uint32_t> triples_;
};

}  // namespace plhg
