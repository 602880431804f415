#include "tetraising/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace tetraising {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::string name)
    : vertex_count_(vertex_count), edges_(std::move(edges)), name_(std::move(name)) {
  if (vertex_count_ < 1) throw InvalidArgument("graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& l, const Edge& r) { return l.id < r.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id != static_cast<int>(i) + 1)
      throw InvalidArgument("edge ids must be 1..E without gaps or duplicates");
    if (e.a < 0 || e.a >= vertex_count_ || e.b < 0 || e.b >= vertex_count_)
      throw InvalidArgument("edge " + std::to_string(e.id) + " has an invalid endpoint");
    if (e.a == e.b)
      throw InvalidArgument("edge " + std::to_string(e.id) + " is a self-loop");
  }
}

const Edge& Graph::edge(int id) const {
  if (id < 1 || id > edge_count())
    throw InvalidArgument("no edge with id " + std::to_string(id));
  return edges_[static_cast<std::size_t>(id - 1)];
}

std::vector<int> Graph::incident_edges(int v) const {
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (e.a == v || e.b == v) out.push_back(e.id);
  return out;
}

namespace {

// Tetrahedron graph T: vertex triads {1,2,3},{1,5,6},{2,4,6},{3,4,5}, so the
// 3-cycles are {1,2,6},{1,3,5},{2,3,4},{4,5,6}; opposite edges (1,4),(2,5),(3,6).
constexpr std::array<Edge, 6> kTetraEdges{{
    {1, 0, 1}, {2, 0, 2}, {3, 0, 3}, {4, 2, 3}, {5, 1, 3}, {6, 1, 2}}};

Graph tetra_with_swap(bool swap_opposite, std::string name) {
  std::vector<Edge> edges;
  for (const Edge& e : kTetraEdges) {
    int id = e.id;
    if (swap_opposite) id = id <= 3 ? id + 3 : id - 3;
    edges.push_back({id, e.a, e.b});
  }
  return Graph(4, std::move(edges), std::move(name));
}

}  // namespace

Graph builtin_graph(BuiltinGraph which) {
  switch (which) {
    case BuiltinGraph::Theta:
      return Graph(2, {{1, 0, 1}, {2, 0, 1}, {3, 0, 1}}, "THETA");
    case BuiltinGraph::Triangle:
      // edge a is opposite vertex a-1: 1 = (1,2), 2 = (2,0), 3 = (0,1)
      return Graph(3, {{1, 1, 2}, {2, 2, 0}, {3, 0, 1}}, "TRIANGLE");
    case BuiltinGraph::Tetra:
      return tetra_with_swap(false, "TETRA");
    case BuiltinGraph::TetraDual:
      return tetra_with_swap(true, "TETRA_DUAL");
  }
  throw InvalidArgument("unknown built-in graph");
}

std::optional<BuiltinGraph> parse_builtin(std::string_view name) {
  if (name == "THETA") return BuiltinGraph::Theta;
  if (name == "TRIANGLE") return BuiltinGraph::Triangle;
  if (name == "TETRA") return BuiltinGraph::Tetra;
  if (name == "TETRA_DUAL") return BuiltinGraph::TetraDual;
  return std::nullopt;
}

Graph builtin_graph(std::string_view name) {
  auto which = parse_builtin(name);
  if (!which) throw InvalidArgument("unknown graph '" + std::string(name) + "'");
  return builtin_graph(*which);
}

std::string_view builtin_name(BuiltinGraph which) {
  switch (which) {
    case BuiltinGraph::Theta: return "THETA";
    case BuiltinGraph::Triangle: return "TRIANGLE";
    case BuiltinGraph::Tetra: return "TETRA";
    case BuiltinGraph::TetraDual: return "TETRA_DUAL";
  }
  return "";
}

std::optional<BuiltinGraph> builtin_kind(const Graph& g) {
  auto which = parse_builtin(g.name());
  if (!which) return std::nullopt;
  const Graph ref = builtin_graph(*which);
  if (ref.vertex_count() != g.vertex_count() || ref.edge_count() != g.edge_count())
    return std::nullopt;
  for (int id = 1; id <= g.edge_count(); ++id) {
    const Edge& x = ref.edge(id);
    const Edge& y = g.edge(id);
    if (std::minmax(x.a, x.b) != std::minmax(y.a, y.b)) return std::nullopt;
  }
  return which;
}

BuiltinGraph dual_builtin(BuiltinGraph which) {
  switch (which) {
    case BuiltinGraph::Theta: return BuiltinGraph::Triangle;
    case BuiltinGraph::Triangle: return BuiltinGraph::Theta;
    case BuiltinGraph::Tetra: return BuiltinGraph::TetraDual;
    case BuiltinGraph::TetraDual: return BuiltinGraph::Tetra;
  }
  throw InvalidArgument("unknown built-in graph");
}

bool cycle_less(const Cycle& lhs, const Cycle& rhs) {
  if (lhs.edges.size() != rhs.edges.size()) return lhs.edges.size() < rhs.edges.size();
  return lhs.edges < rhs.edges;
}

bool is_even_subgraph(const Graph& g, const Cycle& c) {
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int id : c.edges) {
    const Edge& e = g.edge(id);
    ++degree[static_cast<std::size_t>(e.a)];
    ++degree[static_cast<std::size_t>(e.b)];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d % 2 == 0; });
}

LoopPolynomial::LoopPolynomial(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
  for (auto& c : cycles_) {
    std::sort(c.edges.begin(), c.edges.end());
    if (std::adjacent_find(c.edges.begin(), c.edges.end()) != c.edges.end())
      throw InvalidArgument("cycle repeats an edge");
  }
  std::sort(cycles_.begin(), cycles_.end(), cycle_less);
  if (std::adjacent_find(cycles_.begin(), cycles_.end()) != cycles_.end())
    throw InvalidArgument("duplicate cycle in loop polynomial");
  const auto empties = std::count_if(cycles_.begin(), cycles_.end(),
                                     [](const Cycle& c) { return c.edges.empty(); });
  if (empties != 1)
    throw InvalidArgument("loop polynomial must contain the empty cycle exactly once");
  coefficients_.assign(cycles_.size(), 1);
}

LoopPolynomial LoopPolynomial::with_coefficients(std::vector<int> coefficients) const {
  if (coefficients.size() != cycles_.size())
    throw InvalidArgument("one coefficient per cycle required");
  LoopPolynomial out = *this;
  out.coefficients_ = std::move(coefficients);
  return out;
}

double LoopPolynomial::magnitude_scale(const Couplings& y) const {
  double total = 0.0;
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    double term = std::abs(coefficients_[i]);
    for (int e : cycles_[i].edges) term *= std::abs(y.at(e));
    total += term;
  }
  return total;
}

LoopPolynomial enumerate_cycles(const Graph& g) {
  const int edge_count = g.edge_count();
  if (edge_count > kMaxEnumeratedEdges)
    throw InvalidArgument("graph has " + std::to_string(edge_count) +
                          " edges; brute-force enumeration is capped at " +
                          std::to_string(kMaxEnumeratedEdges) +
                          ", build the LoopPolynomial from explicit cycles instead");
  // Bit v of touch[e] is set iff edge e touches vertex v.
  std::vector<std::uint32_t> touch(static_cast<std::size_t>(edge_count));
  const bool compact = g.vertex_count() <= 32;
  for (const Edge& e : g.edges())
    if (compact)
      touch[static_cast<std::size_t>(e.id - 1)] = (1u << e.a) ^ (1u << e.b);

  std::vector<Cycle> cycles;
  const std::uint32_t subsets = 1u << edge_count;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::uint32_t parity = 0;
    for (int i = 0; i < edge_count; ++i)
      if (mask & (1u << i)) parity ^= touch[static_cast<std::size_t>(i)];
    if (compact && parity != 0) continue;
    Cycle c;
    for (int i = 0; i < edge_count; ++i)
      if (mask & (1u << i)) c.edges.push_back(i + 1);
    if (compact || is_even_subgraph(g, c)) cycles.push_back(std::move(c));
  }
  return LoopPolynomial(std::move(cycles));
}

Complex duality_map(Complex y) {
  if (y == Complex(-1.0, 0.0)) throw PoleError("duality map has a pole at Y = -1");
  return (1.0 - y) / (1.0 + y);
}

ExactRational duality_map(const ExactRational& y) {
  if (y == -1) throw PoleError("duality map has a pole at Y = -1");
  ExactRational out = (1 - y) / (1 + y);
  out.canonicalize();
  return out;
}

}  // namespace tetraising
