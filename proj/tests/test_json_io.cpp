#include <doctest.h>

#include "rtd/json_io.hpp"
#include "rtd/partition.hpp"

using namespace rtd;

TEST_CASE("graph JSON round trip") {
  WeightedGraph g({Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  g.set_edge(0, 1, Rational(1, 2));
  g.set_edge(1, 2, Rational(1));
  const Json j = graph_to_json(g);
  CHECK(j.dump() ==
        R"({"vertices":[{"id":0,"w":"1/6"},{"id":1,"w":"1/3"},{"id":2,"w":"1/2"}],"edges":[{"u":0,"v":1,"w":"1/2"},{"u":1,"v":2,"w":"1"}]})");
  CHECK(graph_from_json(j) == g);
  CHECK(parse_weighted_graph(j.dump()) == g);
}

TEST_CASE("missing pairs default to zero and ids may come in any order") {
  const auto g = parse_weighted_graph(R"({"vertices":[{"id":1,"w":"1/2"},{"id":0,"w":"1/2"}],"edges":[{"u":1,"v":0,"w":"1/2"}]})");
  CHECK(g.order() == 2);
  CHECK(g.weight(0, 1) == Rational(1, 2));
  const auto h = parse_weighted_graph(R"({"vertices":[{"id":0,"w":"1/2"},{"id":1,"w":"1/2"}],"edges":[]})");
  CHECK(h.weight(0, 1) == Rational(0));
}

TEST_CASE("malformed graph files") {
  try {
    parse_weighted_graph("{\"vertices\":[\n{\"id\":0,\"w\":\"1\"}\n\"edges\":[]}");
    FAIL("expected a format error");
  } catch (const FormatError &e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_weighted_graph(R"({"vertices":[{"id":0,"w":"1/0"}],"edges":[]})"), FormatError);
  CHECK_THROWS_AS(parse_weighted_graph(R"({"vertices":[{"id":0,"w":"1"},{"id":0,"w":"0"}],"edges":[]})"), FormatError);
  CHECK_THROWS_AS(parse_weighted_graph(R"({"vertices":[{"id":0,"w":"1"}],"edges":[{"u":0,"v":3,"w":"1"}]})"), FormatError);
  CHECK_THROWS_AS(parse_weighted_graph(R"({"edges":[]})"), FormatError);
  CHECK_THROWS_AS(read_weighted_graph("/nonexistent/graph.json"), FormatError);
}

TEST_CASE("spec and weight serialization") {
  const PartitionSpec spec = PartitionSpec::balanced(5, 11, 6);
  CHECK(spec_to_json(spec).dump() == R"({"s":5,"t":11,"b":6,"a":4,"part_sizes":[2,2,1,1]})");
  const WeightAssignment w{{2, Rational(4, 25)}, {1, Rational(9, 50)}};
  CHECK(weights_to_json(w).dump() == R"({"1":"9/50","2":"4/25"})");
  CHECK(rational_json(Rational(1, 4)).dump() == R"({"exact":"1/4","approx":0.25})");
}
