#include "plhg/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "plhg/error.hpp"

namespace plhg {
namespace {

void check_shape(std::uint64_t n, int m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "hypergraph needs m >= 2");
  if (n < static_cast<std::uint64_t>(m)) {
    fail(ErrorCode::InvalidArgument, "hypergraph needs n >= m");
  }
  if (n > 0xffffffffULL) {
    fail(ErrorCode::InvalidArgument, "vertex count must fit in 32 bits");
  }
}

std::string describe(std::span<const Vertex> tuple) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s << ' ';
    s << tuple[i] + 1;
  }
  s << ')';
  return s.str();
}

void check_tuple(std::uint64_t n, std::span<const Vertex> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= n) {
      fail(ErrorCode::Parse, "index out of range in edge " + describe(tuple) +
                                 " (n = " + std::to_string(n) + ")");
    }
    if (i && tuple[i - 1] >= tuple[i]) {
      fail(ErrorCode::Parse, "unsorted tuple " + describe(tuple) +
                                 ": indices must be strictly increasing");
    }
  }
}

// Sorts flat m-tuples lexicographically.
std::vector<Vertex> sort_tuples(std::vector<Vertex> flat, int m) {
  const std::size_t count = flat.size() / m;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * m,
                                        flat.begin() + (a + 1) * m,
                                        flat.begin() + b * m,
                                        flat.begin() + (b + 1) * m);
  });
  std::vector<Vertex> sorted;
  sorted.reserve(flat.size());
  for (std::size_t i : order) {
    sorted.insert(sorted.end(), flat.begin() + i * m,
                  flat.begin() + (i + 1) * m);
  }
  return sorted;
}

}  // namespace

Hypergraph::Hypergraph(std::uint64_t n, int m) : n_(n), m_(m) {
  check_shape(n, m);
}

Hypergraph Hypergraph::from_edges(std::uint64_t n, int m,
                                  std::vector<Vertex> flat) {
  Hypergraph h(n, m);
  if (flat.size() % m != 0) {
    fail(ErrorCode::InvalidArgument, "edge list length is not a multiple of m");
  }
  for (std::size_t i = 0; i < flat.size(); i += m) {
    check_tuple(n, std::span<const Vertex>(flat.data() + i, m));
  }
  h.edges_ = sort_tuples(std::move(flat), m);
  for (std::size_t i = m; i < h.edges_.size(); i += m) {
    if (std::equal(h.edges_.begin() + i - m, h.edges_.begin() + i,
                   h.edges_.begin() + i)) {
      fail(ErrorCode::Parse,
           "duplicate edge " +
               describe(std::span<const Vertex>(h.edges_.data() + i, m)));
    }
  }
  return h;
}

namespace {

// First edge position (in edges) not lexicographically less than tuple.
std::size_t lower_bound_edge(const std::vector<Vertex>& edges, int m,
                             std::span<const Vertex> tuple) {
  std::size_t lo = 0, hi = edges.size() / m;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto first = edges.begin() + mid * m;
    if (std::lexicographical_compare(first, first + m, tuple.begin(),
                                     tuple.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

bool Hypergraph::contains(std::span<const Vertex> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(m_)) return false;
  const std::size_t pos = lower_bound_edge(edges_, m_, tuple);
  return pos < edge_count() &&
         std::equal(tuple.begin(), tuple.end(), edges_.begin() + pos * m_);
}

bool Hypergraph::insert(std::span<const Vertex> tuple) {
  if (tuple.size() != static_cast<std::size_t>(m_)) {
    fail(ErrorCode::InvalidArgument, "tuple size differs from m");
  }
  check_tuple(n_, tuple);
  const std::size_t pos = lower_bound_edge(edges_, m_, tuple);
  if (pos < edge_count() &&
      std::equal(tuple.begin(), tuple.end(), edges_.begin() + pos * m_)) {
    return false;
  }
  edges_.insert(edges_.begin() + pos * m_, tuple.begin(), tuple.end());
  return true;
}

void HypergraphBuilder::add(std::span<const Vertex> tuple) {
  const std::size_t start = flat_.size();
  flat_.insert(flat_.end(), tuple.begin(), tuple.end());
  std::sort(flat_.begin() + start, flat_.end());
}

Hypergraph HypergraphBuilder::build() && {
  return Hypergraph::from_edges(n_, m_, std::move(flat_));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.m() << ' ' << h.n() << ' ' << h.edge_count() << '\n';
  const auto flat = h.flat();
  for (std::size_t i = 0; i < flat.size(); i += h.m()) {
    for (int k = 0; k < h.m(); ++k) {
      if (k) out << ' ';
      out << flat[i + k] + 1;
    }
    out << '\n';
  }
}

void write_hypergraph(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  write_hypergraph(out, h);
  if (!out) fail(ErrorCode::Io, "failed writing '" + path + "'");
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::Parse, "missing header line");
  std::istringstream header(line);
  long long m = 0, n = 0, count = 0;
  std::string extra;
  if (!(header >> m >> n >> count) || (header >> extra)) {
    fail(ErrorCode::Parse, "header must be 'm n edge_count'");
  }
  if (m < 2 || n < m || count < 0) {
    fail(ErrorCode::Parse, "header values out of range");
  }
  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(count) * m);
  long long seen = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    for (long long k = 0; k < m; ++k) {
      long long v = 0;
      if (!(row >> v)) {
        fail(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                   ": expected " + std::to_string(m) +
                                   " indices");
      }
      if (v < 1 || v > n) {
        fail(ErrorCode::Parse, "index out of range on line " +
                                   std::to_string(line_no) + ": " +
                                   std::to_string(v) + " not in [1, " +
                                   std::to_string(n) + "]");
      }
      flat.push_back(static_cast<Vertex>(v - 1));
    }
    if (row >> extra) {
      fail(ErrorCode::Parse,
           "line " + std::to_string(line_no) + ": too many indices");
    }
    ++seen;
  }
  if (seen != count) {
    fail(ErrorCode::Parse, "header declares " + std::to_string(count) +
                               " edges, file has " + std::to_string(seen));
  }
  return Hypergraph::from_edges(static_cast<std::uint64_t>(n),
                                static_cast<int>(m), std::move(flat));
}

Hypergraph read_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  return read_hypergraph(in);
}

}  // namespace plhg
