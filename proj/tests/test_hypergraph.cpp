#include <doctest.h>

#include <sstream>

#include "plhg/error.hpp"
#include "plhg/hypergraph.hpp"

using namespace plhg;

namespace {

std::string parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_hypergraph(in);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("from_edges sorts tuples lexicographically") {
  const Hypergraph h = Hypergraph::from_edges(5, 3, {1, 2, 4, 0, 1, 2, 0, 1, 3});
  REQUIRE(h.edge_count() == 3);
  CHECK(h.edge(0)[0] == 0);
  CHECK(h.edge(0)[2] == 2);
  CHECK(h.edge(1)[2] == 3);
  CHECK(h.edge(2)[0] == 1);
  const Vertex t[3] = {0, 1, 3};
  CHECK(h.contains(t));
}

TEST_CASE("from_edges rejects malformed tuples with distinct messages") {
  auto message = [](std::vector<Vertex> flat) {
    try {
      Hypergraph::from_edges(4, 3, std::move(flat));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message({0, 1, 4}).find("index out of range") != std::string::npos);
  CHECK(message({0, 2, 1}).find("unsorted tuple") != std::string::npos);
  CHECK(message({0, 1, 1}).find("unsorted tuple") != std::string::npos);
  CHECK(message({0, 1, 2, 0, 1, 2}).find("duplicate edge") != std::string::npos);
}

TEST_CASE("insert keeps canonical order and refuses duplicates") {
  Hypergraph h(6, 3);
  const Vertex a[3] = {2, 3, 5}, b[3] = {0, 1, 2};
  CHECK(h.insert(a));
  CHECK(h.insert(b));
  CHECK_FALSE(h.insert(a));
  CHECK(h.edge_count() == 2);
  CHECK(h.edge(0)[0] == 0);
  CHECK(h == Hypergraph::from_edges(6, 3, {2, 3, 5, 0, 1, 2}));
}

TEST_CASE("builder sorts entries within tuples") {
  HypergraphBuilder builder(5, 3);
  const Vertex t1[3] = {4, 0, 2}, t2[3] = {3, 1, 0};
  builder.add(t1);
  builder.add(t2);
  const Hypergraph h = std::move(builder).build();
  CHECK(h == Hypergraph::from_edges(5, 3, {0, 1, 3, 0, 2, 4}));
}

TEST_CASE("constructor validates shape") {
  CHECK_THROWS_AS(Hypergraph(3, 1), Error);
  CHECK_THROWS_AS(Hypergraph(2, 3), Error);
  CHECK_NOTHROW(Hypergraph(3, 3));
}

TEST_CASE("file round trip uses 1-based sorted lines") {
  const Hypergraph h = Hypergraph::from_edges(5, 3, {1, 2, 4, 0, 1, 2});
  std::ostringstream out;
  write_hypergraph(out, h);
  CHECK(out.str() == "3 5 2\n1 2 3\n2 3 5\n");
  std::istringstream in(out.str());
  CHECK(read_hypergraph(in) == h);

  std::ostringstream empty;
  write_hypergraph(empty, Hypergraph(4, 2));
  CHECK(empty.str() == "2 4 0\n");
}

TEST_CASE("reader accepts edge lines in any order") {
  std::istringstream in("3 5 2\n2 3 5\n1 2 3\n");
  CHECK(read_hypergraph(in) == Hypergraph::from_edges(5, 3, {0, 1, 2, 1, 2, 4}));
}

TEST_CASE("reader reports each malformation distinctly") {
  CHECK(parse_error("3 5 2\n1 2 3\n1 2 3\n").find("duplicate edge") !=
        std::string::npos);
  CHECK(parse_error("3 5 1\n1 3 2\n").find("unsorted tuple") !=
        std::string::npos);
  CHECK(parse_error("3 5 1\n1 2 6\n").find("index out of range") !=
        std::string::npos);
  CHECK(parse_error("3 5 1\n0 2 3\n").find("index out of range") !=
        std::string::npos);
  CHECK(parse_error("3 5 2\n1 2 3\n").find("declares") != std::string::npos);
  CHECK(parse_error("3 5\n").find("header") != std::string::npos);
  CHECK(parse_error("").find("header") != std::string::npos);
  CHECK(parse_error("3 5 1\n1 2\n").find("expected 3") != std::string::npos);
  CHECK(parse_error("3 5 1\n1 2 3 4\n").find("too many") != std::string::npos);
}
