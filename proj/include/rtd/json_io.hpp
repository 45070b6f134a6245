#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rtd/partition.hpp"
#include "rtd/rational.hpp"
#include "rtd/weighted_graph.hpp"

namespace rtd {

using Json = nlohmann::ordered_json;

// Thrown for unreadable or malformed graph files. line() is 0 when the
// problem is structural rather than a syntax error at a known position.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string &what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// {"exact":"p/q","approx":<double>}
Json rational_json(const Rational &r);

// {"vertices":[{"id":0,"w":"1/6"},...],"edges":[{"u":0,"v":1,"w":"1/2"},...]}
// Vertices in id order, edges with u < v, zero-weight pairs omitted.
Json graph_to_json(const WeightedGraph &g);
WeightedGraph graph_from_json(const Json &j);

// {"s":5,"t":11,"b":6,"a":4,"part_sizes":[2,2,1,1]}
Json spec_to_json(const PartitionSpec &spec);
// Per-vertex class weights keyed by part size: {"1":"9/50","2":"4/25"}.
Json weights_to_json(const WeightAssignment &w);

WeightedGraph parse_weighted_graph(const std::string &text);
WeightedGraph read_weighted_graph(const std::string &path);

} // namespace rtd
