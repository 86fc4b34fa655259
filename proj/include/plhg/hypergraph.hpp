#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace plhg {

using Vertex = std::uint32_t;

/// Realized m-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored flat (m entries per edge), each tuple strictly
/// increasing, tuples in lexicographic order with no duplicates. The
/// canonical form is what makes the adjacency tensor symmetric: a vertex set
/// has exactly one representation.
///
/// Vertex indices are 0-based in memory and 1-based in files.
class Hypergraph {
 public:
  Hypergraph(std::uint64_t n, int m);

  /// Validates and canonicalizes `flat` (tuple order is free, entries
  /// within a tuple must already be increasing). Throws Parse errors with
  /// distinct messages for unsorted tuples, out-of-range indices and
  /// duplicate edges.
  static Hypergraph from_edges(std::uint64_t n, int m,
                               std::vector<Vertex> flat);

  std::uint64_t n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t edge_count() const { return edges_.size() / m_; }
  bool empty() const { return edges_.empty(); }

  std::span<const Vertex> edge(std::uint64_t i) const {
    return {edges_.data() + i * m_, static_cast<std::size_t>(m_)};
  }
  std::span<const Vertex> flat() const { return edges_; }

  bool contains(std::span<const Vertex> tuple) const;

  /// Inserts a canonical tuple, keeping lexicographic order. Returns false
  /// if it was already present.
  bool insert(std::span<const Vertex> tuple);

  bool operator==(const Hypergraph&) const = default;

 private:
  std::uint64_t n_;
  int m_;
  std::vector<Vertex> edges_;
};

/// Accumulates tuples in any order and produces a canonical Hypergraph.
class HypergraphBuilder {
 public:
  HypergraphBuilder(std::uint64_t n, int m) : n_(n), m_(m) {}

  /// Tuple entries need not be sorted.
  void add(std::span<const Vertex> tuple);
  Hypergraph build() &&;

 private:
  std::uint64_t n_;
  int m_;
  std::vector<Vertex> flat_;
};

// File format: first line "m n edge_count", then one edge per line as m
// space-separated 1-based ascending indices, lines sorted lexicographically.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph(const std::string& path, const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph(const std::string& path);

}  // namespace plhg
