#include "pairdom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "pairdom/errors.hpp"
#include "pairdom/text_lines.hpp"

namespace pairdom {

Graph parse_graph(std::string_view text) {
  detail::LineReader reader(text);
  auto header = reader.next();
  if (!header) throw ParseError(0, "empty input, expected header \"n m\"");
  auto head = detail::parse_fields(*header, 2, "header \"n m\"");
  if (head[0] < 0 || head[1] < 0)
    throw ParseError(header->number, "negative count in header");
  const auto n = head[0];
  const auto m = head[1];
  if (n > 100'000'000) throw ParseError(header->number, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  while (auto line = reader.next()) {
    if (static_cast<std::int64_t>(edges.size()) == m)
      throw ParseError(line->number, "more than " + std::to_string(m) + " edge lines");
    auto uv = detail::parse_fields(*line, 2, "edge \"u v\"");
    auto u = uv[0], v = uv[1];
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line->number, "vertex id out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(line->number, "self-loop at " + std::to_string(u));
    auto lo = static_cast<std::uint64_t>(std::min(u, v));
    auto hi = static_cast<std::uint64_t>(std::max(u, v));
    if (!seen.insert(lo << 32 | hi).second)
      throw ParseError(line->number, "duplicate edge " + std::to_string(lo) + " " +
                                         std::to_string(hi));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(0, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph &g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

nlohmann::json solution_to_json(const PairedSolution &sol) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [u, v] : sol.pairs) pairs.push_back({u, v});
  return {{"size", sol.size()}, {"vertices", sol.vertices}, {"pairs", pairs}};
}

PairedSolution solution_from_json(const nlohmann::json &doc) {
  try {
    PairedSolution sol;
    sol.vertices = doc.at("vertices").get<std::vector<Vertex>>();
    for (const auto &p : doc.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw ParseError(0, "pair must have two ids");
      sol.pairs.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
    }
    if (doc.contains("size") && doc.at("size").get<std::size_t>() != sol.vertices.size())
      throw ParseError(0, "\"size\" disagrees with \"vertices\"");
    return sol;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("solution JSON: ") + e.what());
  }
}

} // namespace pairdom
