#include "plhg/stats.hpp"

#include <algorithm>

#include "plhg/error.hpp"

namespace plhg {
namespace {

// Dense triangular pair storage up to this many pairs (256 MiB of counters).
constexpr std::uint64_t kDensePairLimit = std::uint64_t{1} << 26;

int intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  int shared = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return shared;
}

}  // namespace

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count parse_count(const std::string& text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty count");
  Count value = 0;
  const Count limit = ~Count{0};
  for (char ch : text) {
    if (ch < '0' || ch > '9') fail(ErrorCode::Parse, "bad count '" + text + "'");
    const unsigned digit = static_cast<unsigned>(ch - '0');
    if (value > (limit - digit) / 10) {
      fail(ErrorCode::Parse, "count '" + text + "' overflows 128 bits");
    }
    value = value * 10 + digit;
  }
  return value;
}

std::uint64_t count_hyperedges(const Hypergraph& h) { return h.edge_count(); }

Count count_loose2_bruteforce(const Hypergraph& h) {
  if (h.m() == 2) {
    fail(ErrorCode::Domain,
         "loose 2-cycles are undefined for m = 2 (two edges sharing two "
         "vertices are the same edge)");
  }
  const std::uint64_t edges = h.edge_count();
  if (edges > kBruteForceEdgeLimit) {
    fail(ErrorCode::Guard, "brute-force loose 2-cycle count limited to " +
                               std::to_string(kBruteForceEdgeLimit) +
                               " edges, got " + std::to_string(edges));
  }
  Count total = 0;
  for (std::uint64_t i = 0; i < edges; ++i) {
    const auto e = h.edge(i);
    for (std::uint64_t j = i + 1; j < edges; ++j) {
      if (intersection_size(e, h.edge(j)) == 2) ++total;
    }
  }
  return total;
}

Count count_loose2_pairmap(const Hypergraph& h) {
  if (h.m() != 3 && h.m() != 4) {
    fail(ErrorCode::Domain, "pair-map loose 2-cycle count needs m in {3,4}");
  }
  Loose2Accumulator acc(h.n(), h.m());
  for (std::uint64_t i = 0; i < h.edge_count(); ++i) acc.add(h.edge(i));
  return acc.loose2();
}

MotifCounts count_motifs(const Hypergraph& h) {
  MotifCounts counts;
  counts.edge_count = h.edge_count();
  Loose2Accumulator acc(h.n(), h.m());
  for (std::uint64_t i = 0; i < h.edge_count(); ++i) acc.add(h.edge(i));
  counts.pair_degree_histogram = acc.pair_degree_histogram();
  if (h.m() == 3 || h.m() == 4) {
    counts.loose2_count = acc.loose2();
  } else if (h.m() > 4) {
    counts.loose2_count = count_loose2_bruteforce(h);
  }
  return counts;
}

Loose2Accumulator::Loose2Accumulator(std::uint64_t n, int m) : n_(n), m_(m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "accumulator needs m >= 2");
  if (m == 4 && n > (std::uint64_t{1} << 21)) {
    fail(ErrorCode::InvalidArgument, "m = 4 triple keys need n <= 2^21");
  }
  const std::uint64_t pairs = n * (n - 1) / 2;
  if (pairs <= kDensePairLimit) dense_pairs_.assign(pairs, 0);
}

void Loose2Accumulator::bump_pair(Vertex a, Vertex b) {
  std::uint32_t before;
  if (!dense_pairs_.empty()) {
    const std::uint64_t bb = b;
    before = dense_pairs_[bb * (bb - 1) / 2 + a]++;
  } else {
    before = sparse_pairs_[std::uint64_t{a} * n_ + b]++;
  }
  pair_sum_ += before;
}

void Loose2Accumulator::bump_triple(Vertex a, Vertex b, Vertex c) {
  const std::uint64_t key = (std::uint64_t{a} * n_ + b) * n_ + c;
  triple_sum_ += triples_[key]++;
}

Count Loose2Accumulator::loose2() const {
  if (m_ != 3 && m_ != 4) {
    fail(ErrorCode::Domain, "pair-map loose 2-cycle count needs m in {3,4}");
  }
  // An edge pair sharing three vertices (m = 4) shows up in three pair
  // degrees and exactly one triple degree.
  return pair_sum_ - 3 * triple_sum_;
}

void Loose2Accumulator::add(std::span<const Vertex> t) {
  if (t.size() != static_cast<std::size_t>(m_)) {
    fail(ErrorCode::InvalidArgument, "tuple size differs from m");
  }
  ++edges_;
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) bump_pair(t[i], t[j]);
  }
  if (m_ == 4) {
    bump_triple(t[0], t[1], t[2]);
    bump_triple(t[0], t[1], t[3]);
    bump_triple(t[0], t[2], t[3]);
    bump_triple(t[1], t[2], t[3]);
  }
}

std::map<std::uint32_t, std::uint64_t> Loose2Accumulator::pair_degree_histogram()
    const {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (std::uint32_t d : dense_pairs_) {
    if (d) ++hist[d];
  }
  for (const auto& [key, d] : sparse_pairs_) {
    if (d) ++hist[d];
  }
  return hist;
}

std::uint64_t Loose2Accumulator::pair_degree_total() const {
  std::uint64_t total = 0;
  for (std::uint32_t d : dense_pairs_) total += d;
  for (const auto& [key, d] : sparse_pairs_) total += d;
  return total;
}

}  // namespace plhg
