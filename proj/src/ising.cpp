#include "tetraising/ising.hpp"

#include <cstdint>

namespace tetraising {

namespace {

void require_vertex_cap(const Graph& g) {
  if (g.vertex_count() > kMaxIsingVertices)
    throw InvalidArgument("Ising enumeration is capped at " + std::to_string(kMaxIsingVertices) +
                          " vertices");
}

bool aligned(const Edge& e, std::uint32_t config) {
  return ((config >> e.a) & 1u) == ((config >> e.b) & 1u);
}

Graph dual_of(const Graph& g) {
  const auto kind = builtin_kind(g);
  if (!kind) throw Unsupported("dual graph is only known for built-in graphs");
  return builtin_graph(dual_builtin(*kind));
}

Graph tetra() { return builtin_graph(BuiltinGraph::Tetra); }
Graph tetra_dual() { return builtin_graph(BuiltinGraph::TetraDual); }

template <class T>
void require_no_pole(const EdgeValues<T>& y) {
  for (const auto& v : y.values())
    if (v == T(-1)) throw PoleError("coupling -1 is a pole of the duality map");
}

// sum over sigma of prod_e (1 + sigma_a sigma_b Y_e)
ExactRational spin_sum_tanh(const Graph& g, const ExactCouplings& y) {
  ExactRational total = 0;
  const std::uint32_t configs = 1u << g.vertex_count();
  for (std::uint32_t s = 0; s < configs; ++s) {
    ExactRational term = 1;
    for (const Edge& e : g.edges())
      term *= aligned(e, s) ? ExactRational(1 + y.at(e.id)) : ExactRational(1 - y.at(e.id));
    total += term;
  }
  return total;
}

}  // namespace

Complex ising_partition(const Graph& g, const Couplings& y) {
  require_vertex_cap(g);
  y.require_matches(g);
  Complex total = 0.0;
  const std::uint32_t configs = 1u << g.vertex_count();
  for (std::uint32_t s = 0; s < configs; ++s) {
    Complex exponent = 0.0;
    for (const Edge& e : g.edges()) exponent += aligned(e, s) ? y.at(e.id) : -y.at(e.id);
    total += std::exp(exponent);
  }
  return total;
}

ExactRational ising_partition_exact(const Graph& g, const ExactCouplings& w) {
  require_vertex_cap(g);
  w.require_matches(g);
  for (const auto& v : w.values())
    if (v <= 0) throw InvalidArgument("exp(y) must be positive");
  ExactRational total = 0;
  const std::uint32_t configs = 1u << g.vertex_count();
  for (std::uint32_t s = 0; s < configs; ++s) {
    ExactRational term = 1;
    for (const Edge& e : g.edges()) {
      if (aligned(e, s))
        term *= w.at(e.id);
      else
        term /= w.at(e.id);
    }
    total += term;
  }
  return total;
}

HyperbolicPair HyperbolicPair::from_exp(const ExactRational& w) {
  if (w <= 0) throw InvalidArgument("exp(y) must be positive");
  const ExactRational inv = 1 / w;
  return {(w + inv) / 2, (w - inv) / 2};
}

Complex check_high_temp(const Graph& g, const Couplings& y) {
  const Complex lhs = ising_partition(g, y);
  Couplings t(g.edge_count(), 0.0);
  Complex prefactor = std::ldexp(1.0, g.vertex_count());
  for (int e = 1; e <= g.edge_count(); ++e) {
    t.at(e) = std::tanh(y.at(e));
    prefactor *= std::cosh(y.at(e));
  }
  return lhs - prefactor * enumerate_cycles(g).evaluate(t);
}

ExactRational check_high_temp(const Graph& g, const HyperbolicCouplings& y) {
  y.require_matches(g);
  ExactCouplings w(g.edge_count(), 0), t(g.edge_count(), 0);
  ExactRational prefactor = pow2(g.vertex_count());
  for (int e = 1; e <= g.edge_count(); ++e) {
    w.at(e) = y.at(e).exp();
    t.at(e) = y.at(e).tanh();
    prefactor *= y.at(e).c;
  }
  return ising_partition_exact(g, w) - prefactor * enumerate_cycles(g).evaluate(t);
}

Complex check_low_temp(const Graph& g, const Couplings& y) {
  const Graph dual = dual_of(g);
  const Complex lhs = ising_partition(g, y);
  Couplings x(g.edge_count(), 0.0);
  Complex prefactor = 2.0;
  for (int e = 1; e <= g.edge_count(); ++e) {
    x.at(e) = std::exp(-2.0 * y.at(e));
    prefactor *= std::exp(y.at(e));
  }
  return lhs - prefactor * enumerate_cycles(dual).evaluate(x);
}

ExactRational check_low_temp(const Graph& g, const HyperbolicCouplings& y) {
  const Graph dual = dual_of(g);
  y.require_matches(g);
  ExactCouplings w(g.edge_count(), 0), x(g.edge_count(), 0);
  ExactRational prefactor = 2;
  for (int e = 1; e <= g.edge_count(); ++e) {
    w.at(e) = y.at(e).exp();
    x.at(e) = 1 / (w.at(e) * w.at(e));
    prefactor *= w.at(e);
  }
  return ising_partition_exact(g, w) - prefactor * enumerate_cycles(dual).evaluate(x);
}

namespace {

template <class T>
T duality_residual(const Graph& g, const EdgeValues<T>& y, DualityDirection dir, T pow2_fwd,
                   T pow2_bwd) {
  const Graph dual = dual_of(g);
  y.require_matches(g);
  require_no_pole(y);
  const EdgeValues<T> ystar = duality_map(y);
  const T p = enumerate_cycles(g).evaluate(y);
  const T pstar = enumerate_cycles(dual).evaluate(ystar);
  T prod(1);
  if (dir == DualityDirection::Forward) {
    for (const auto& v : ystar.values()) prod *= T(1) + v;
    return pow2_fwd * prod * p - pstar;
  }
  for (const auto& v : y.values()) prod *= T(1) + v;
  return p - pow2_bwd * prod * pstar;
}

}  // namespace

ExactRational check_duality_on_p(const Graph& g, const ExactCouplings& y, DualityDirection dir) {
  const int v = g.vertex_count(), e = g.edge_count();
  return duality_residual<ExactRational>(g, y, dir, pow2(v - e - 1), pow2(1 - v));
}

Complex check_duality_on_p(const Graph& g, const Couplings& y, DualityDirection dir) {
  const int v = g.vertex_count(), e = g.edge_count();
  return duality_residual<Complex>(g, y, dir, std::ldexp(1.0, v - e - 1), std::ldexp(1.0, 1 - v));
}

Complex check_westbury(const Graph& g, const Couplings& y) {
  y.require_matches(g);
  Couplings atanh_y(g.edge_count(), 0.0);
  Complex prod = 1.0;
  for (int e = 1; e <= g.edge_count(); ++e) {
    const Complex v = y.at(e);
    if (v == Complex(1.0) || v == Complex(-1.0))
      throw PoleError("coupling +-1 has no finite atanh");
    atanh_y.at(e) = std::atanh(v);
    prod *= 1.0 - v * v;
  }
  const Complex p = enumerate_cycles(g).evaluate(y);
  if (p == Complex(0.0)) throw PoleError("P vanishes: this is a Fisher zero");
  const Complex i = ising_partition(g, atanh_y);
  return prod * i * i / (p * p) - std::ldexp(1.0, 2 * g.vertex_count());
}

ExactRational check_westbury(const Graph& g, const ExactCouplings& y) {
  require_vertex_cap(g);
  y.require_matches(g);
  for (const auto& v : y.values())
    if (v == 1 || v == -1) throw PoleError("coupling +-1 has no finite atanh");
  const ExactRational p = enumerate_cycles(g).evaluate(y);
  if (p == 0) throw PoleError("P vanishes: this is a Fisher zero");
  const ExactRational s = spin_sum_tanh(g, y);
  return s * s / (p * p) - pow2(2 * g.vertex_count());
}

Complex self_duality_residual(const Couplings& y) {
  y.require_matches(tetra());
  require_no_pole(y);
  const Couplings ystar = duality_map(y);
  Complex prod = 1.0;
  for (const auto& v : ystar.values()) prod *= 1.0 + v;
  return prod * enumerate_cycles(tetra()).evaluate(y) -
         8.0 * enumerate_cycles(tetra_dual()).evaluate(ystar);
}

ExactRational self_duality_residual(const ExactCouplings& y) {
  y.require_matches(tetra());
  require_no_pole(y);
  const ExactCouplings ystar = duality_map(y);
  ExactRational prod = 1;
  for (const auto& v : ystar.values()) prod *= 1 + v;
  return prod * enumerate_cycles(tetra()).evaluate(y) -
         8 * enumerate_cycles(tetra_dual()).evaluate(ystar);
}

PachnerReduction pachner_reduce(const Couplings& y) {
  const Graph t = tetra();
  y.require_matches(t);
  const Complex y4 = y.at(4), y5 = y.at(5), y6 = y.at(6);
  const Complex factor = 1.0 + y4 * y5 * y6;
  // star-triangle legs: u_a u_b must reproduce (Y_c + Y_a Y_b) / (1 + Y4 Y5 Y6)
  // exactly, so only the first leg takes a principal root and the others
  // follow from it; independent roots would get the relative signs wrong
  // for complex couplings.
  const Complex t4 = y4 + y5 * y6, t5 = y5 + y4 * y6, t6 = y6 + y4 * y5;
  if (factor == Complex(0.0) || t4 == Complex(0.0) || t5 == Complex(0.0) || t6 == Complex(0.0))
    throw DegenerateError("Pachner reduction has a vanishing radicand");
  // edge 1 meets the triangle at the vertex of edges 5, 6 (opposite edge 4),
  // edge 2 at 4, 6 and edge 3 at 4, 5
  const Complex u1 = std::sqrt(t5 * t6 / (t4 * factor));
  const Complex u2 = t6 / (factor * u1);
  const Complex u3 = t5 / (factor * u1);
  Couplings reduced({y.at(1) * u1, y.at(2) * u2, y.at(3) * u3});
  return {factor, reduced};
}

Couplings scissor_transform(const Couplings& y) {
  y.require_matches(tetra());
  const Complex prod = y.at(2) * y.at(3) * y.at(5) * y.at(6);
  if (prod == Complex(0.0)) throw DegenerateError("scissor transform needs Y2 Y3 Y5 Y6 != 0");
  const Complex root = std::sqrt(prod);
  Couplings out = y;
  for (int e : {2, 3, 5, 6}) out.at(e) = root / y.at(e);
  return out;
}

}  // namespace tetraising
