#include "rtd/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rtd {

Json rational_json(const Rational &r) {
  Json j;
  j["exact"] = r.str();
  j["approx"] = r.to_double();
  return j;
}

Json graph_to_json(const WeightedGraph &g) {
  Json j;
  j["vertices"] = Json::array();
  for (Vertex v = 0; v < g.order(); ++v)
    j["vertices"].push_back({{"id", v}, {"w", g.weight(v).str()}});
  j["edges"] = Json::array();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.weight(u, v).is_zero())
        j["edges"].push_back({{"u", u}, {"v", v}, {"w", g.weight(u, v).str()}});
  return j;
}

Json spec_to_json(const PartitionSpec &spec) {
  return {{"s", spec.s}, {"t", spec.t}, {"b", spec.b}, {"a", spec.a}, {"part_sizes", spec.part_sizes}};
}

Json weights_to_json(const WeightAssignment &w) {
  Json j = Json::object();
  for (const auto &[size, x] : w)
    j[std::to_string(size)] = x.str();
  return j;
}

namespace {

Rational weight_field(const Json &obj, const std::string &where) {
  if (!obj.contains("w"))
    throw FormatError(where + ": missing \"w\"", 0);
  const auto &w = obj.at("w");
  try {
    if (w.is_string())
      return Rational::parse(w.get<std::string>());
    if (w.is_number_integer())
      return Rational(w.get<long>());
  } catch (const std::invalid_argument &e) {
    throw FormatError(where + ": " + e.what(), 0);
  }
  throw FormatError(where + ": weight must be a string \"p/q\"", 0);
}

std::size_t index_field(const Json &obj, const char *key, const std::string &where) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer() || obj.at(key).get<long long>() < 0)
    throw FormatError(where + ": \"" + key + "\" must be a non-negative integer", 0);
  return obj.at(key).get<std::size_t>();
}

} // namespace

WeightedGraph graph_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
    throw FormatError("graph must be an object with a \"vertices\" array", 0);
  const auto &vs = j.at("vertices");
  const std::size_t n = vs.size();
  std::vector<Rational> weights(n);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const std::size_t id = index_field(vs[i], "id", where);
    if (id >= n)
      throw FormatError(where + ": id " + std::to_string(id) + " out of range for " + std::to_string(n) + " vertices", 0);
    if (seen[id])
      throw FormatError(where + ": duplicate id " + std::to_string(id), 0);
    seen[id] = 1;
    weights[id] = weight_field(vs[i], where);
  }
  WeightedGraph g(std::move(weights));
  if (j.contains("edges")) {
    if (!j.at("edges").is_array())
      throw FormatError("\"edges\" must be an array", 0);
    const auto &es = j.at("edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const std::size_t u = index_field(es[i], "u", where);
      const std::size_t v = index_field(es[i], "v", where);
      if (u >= n || v >= n)
        throw FormatError(where + ": endpoint out of range", 0);
      // A self-pair is stored as given so that validation can report it.
      if (u == v)
        g.set_entry(u, v, weight_field(es[i], where));
      else
        g.set_edge(u, v, weight_field(es[i], where));
    }
  }
  return g;
}

WeightedGraph parse_weighted_graph(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(upto > 0 ? upto - 1 : 0), '\n'));
    throw FormatError("line " + std::to_string(line) + ": " + e.what(), line);
  }
  return graph_from_json(j);
}

WeightedGraph read_weighted_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open graph file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_weighted_graph(ss.str());
}

} // namespace rtd
