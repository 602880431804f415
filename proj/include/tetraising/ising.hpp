#pragma once

#include "tetraising/graph.hpp"
#include "tetraising/rational.hpp"

namespace tetraising {

inline constexpr int kMaxIsingVertices = 24;

/// I = sum over sigma in {+1,-1}^V of exp(sum_e y_e sigma_a sigma_b).
Complex ising_partition(const Graph& g, const Couplings& y);

/// Exact partition function from w_e = exp(y_e), so each edge contributes
/// w_e when its spins agree and 1/w_e otherwise.
ExactRational ising_partition_exact(const Graph& g, const ExactCouplings& w);

/// A rational point (cosh y, sinh y) on c^2 - s^2 = 1. Every identity that
/// mixes exp, cosh and tanh of the same y is rational in such a pair.
struct HyperbolicPair {
  ExactRational c;
  ExactRational s;

  /// From w = exp(y): c = (w + 1/w)/2, s = (w - 1/w)/2.
  static HyperbolicPair from_exp(const ExactRational& w);
  ExactRational exp() const { return c + s; }
  ExactRational tanh() const { return s / c; }
};

using HyperbolicCouplings = EdgeValues<HyperbolicPair>;

/// I(y) - 2^V prod_e cosh(y_e) P(tanh y).
Complex check_high_temp(const Graph& g, const Couplings& y);
ExactRational check_high_temp(const Graph& g, const HyperbolicCouplings& y);

/// I(y) - 2 prod_e exp(y_e) P_dual(exp(-2 y_e)), for built-in graphs.
Complex check_low_temp(const Graph& g, const Couplings& y);
ExactRational check_low_temp(const Graph& g, const HyperbolicCouplings& y);

enum class DualityDirection {
  Forward,   // 2^{V-E-1} prod(1+Y*) P(Y) - P_dual(Y*)
  Backward,  // P(Y) - 2^{1-V} prod(1+Y) P_dual(Y*)
};

/// Residual of the duality relation between P on a built-in graph and P on
/// its dual, with Y* = D(Y).
ExactRational check_duality_on_p(const Graph& g, const ExactCouplings& y, DualityDirection dir);
Complex check_duality_on_p(const Graph& g, const Couplings& y, DualityDirection dir);

/// prod_e (1 - Y_e^2) I(atanh Y)^2 / P(Y)^2 - 2^{2V}. The exact overload uses
/// exp(y sigma sigma') = cosh y (1 + sigma sigma' Y), so I^2 prod(1 - Y^2) is
/// the square of a polynomial in Y. Throws PoleError when P(Y) = 0 or some
/// Y_e = +-1.
Complex check_westbury(const Graph& g, const Couplings& y);
ExactRational check_westbury(const Graph& g, const ExactCouplings& y);

/// prod_e (1 + D(Y_e)) P_T(Y) - 8 P_T*(D(Y)) on the tetrahedron.
Complex self_duality_residual(const Couplings& y);
ExactRational self_duality_residual(const ExactCouplings& y);

struct PachnerReduction {
  Complex factor;     // 1 + Y4 Y5 Y6
  Couplings reduced;  // THETA couplings
};

/// Contracts the 3-cycle {4,5,6} of the tetrahedron, so that
/// signs of the others, since only their pairwise products enter P_THETA.
/// pairwise products of the reduced couplings enter P_THETA.
PachnerReduction pachner_reduce(const Couplings& y);

/// Inversion around the 4-cycle {2,3,5,6}: Y_e -> sqrt(Y2 Y3 Y5 Y6) / Y_e on
/// those edges, Y1 and Y4 unchanged. Leaves P_T invariant.
Couplings scissor_transform(const Couplings& y);

}  // namespace tetraising
