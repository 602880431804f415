#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tetraising/errors.hpp"
#include "tetraising/rational.hpp"

namespace tetraising {

enum class BuiltinGraph { Theta, Triangle, Tetra, TetraDual };

struct Edge {
  int id = 0;  // 1..E
  int a = 0;   // vertex index, 0-based
  int b = 0;
};

/// Finite undirected multigraph with edges labeled 1..E. Self-loops are
/// rejected. Orientation is not stored: built-in loop polynomials carry the
/// sign convention (every monomial coefficient +1).
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges, std::string name = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const;
  const std::string& name() const { return name_; }

  /// Edge ids incident to vertex v, ascending.
  std::vector<int> incident_edges(int v) const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;  // edges_[id - 1].id == id
  std::string name_;
};

Graph builtin_graph(BuiltinGraph which);
Graph builtin_graph(std::string_view name);
std::optional<BuiltinGraph> parse_builtin(std::string_view name);
std::string_view builtin_name(BuiltinGraph which);
std::optional<BuiltinGraph> builtin_kind(const Graph& g);

/// Planar dual among the built-ins: THETA <-> TRIANGLE, TETRA <-> TETRA_DUAL.
/// Edge e of the dual crosses edge e of the original.
BuiltinGraph dual_builtin(BuiltinGraph which);

/// Per-edge values indexed by edge id (1-based).
template <class T>
class EdgeValues {
 public:
  EdgeValues() = default;
  explicit EdgeValues(std::vector<T> values) : values_(std::move(values)) {}
  EdgeValues(std::size_t count, const T& fill) : values_(count, fill) {}

  std::size_t size() const { return values_.size(); }
  const T& at(int id) const {
    if (id < 1 || static_cast<std::size_t>(id) > values_.size())
      throw InvalidArgument("no coupling for edge " + std::to_string(id));
    return values_[static_cast<std::size_t>(id - 1)];
  }
  T& at(int id) {
    return const_cast<T&>(static_cast<const EdgeValues&>(*this).at(id));
  }
  const std::vector<T>& values() const { return values_; }

  /// Throws unless the values cover exactly the edges of g.
  void require_matches(const Graph& g) const {
    if (values_.size() != static_cast<std::size_t>(g.edge_count()))
      throw InvalidArgument("expected " + std::to_string(g.edge_count()) +
                            " couplings, got " +
                            std::to_string(values_.size()));
  }

 private:
  std::vector<T> values_;
};

using Couplings = EdgeValues<Complex>;
using ExactCouplings = EdgeValues<ExactRational>;

/// An even subgraph, as a sorted set of edge ids.
struct Cycle {
  std::vector<int> edges;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Order used for serialization: by size, then lexicographic edge list.
bool cycle_less(const Cycle& lhs, const Cycle& rhs);

bool is_even_subgraph(const Graph& g, const Cycle& c);

/// Sum over cycles of (coefficient * product of couplings). Coefficients are
/// +1 unless overridden; the override exists for user graphs whose sign
/// convention is not the all-plus one.
class LoopPolynomial {
 public:
  explicit LoopPolynomial(std::vector<Cycle> cycles);

  const std::vector<Cycle>& cycles() const { return cycles_; }
  const std::vector<int>& coefficients() const { return coefficients_; }
  std::size_t size() const { return cycles_.size(); }

  LoopPolynomial with_coefficients(std::vector<int> coefficients) const;

  template <class T>
  T evaluate(const EdgeValues<T>& y) const {
    T total(0);
    for (std::size_t i = 0; i < cycles_.size(); ++i) {
      T term(coefficients_[i]);
      for (int e : cycles_[i].edges) term *= y.at(e);
      total += term;
    }
    return total;
  }

  /// Sum over cycles of the product of |Y_e|; the scale used to normalize
  /// residuals of candidate zeros.
  double magnitude_scale(const Couplings& y) const;

 private:
  std::vector<Cycle> cycles_;
  std::vector<int> coefficients_;
};

inline constexpr int kMaxEnumeratedEdges = 24;

/// All even subgraphs by brute force over the 2^E edge subsets.
LoopPolynomial enumerate_cycles(const Graph& g);

template <class T>
T eval_loop_polynomial(const LoopPolynomial& p, const EdgeValues<T>& y) {
  return p.evaluate(y);
}

/// D(Y) = (1 - Y) / (1 + Y), an involution exchanging high- and
/// low-temperature couplings.
Complex duality_map(Complex y);
ExactRational duality_map(const ExactRational& y);

template <class T>
EdgeValues<T> duality_map(const EdgeValues<T>& y) {
  std::vector<T> out;
  out.reserve(y.size());
  for (const auto& v : y.values()) out.push_back(duality_map(v));
  return EdgeValues<T>(std::move(out));
}

}  // namespace tetraising
