#pragma once

#include <array>
#include <vector>

#include "tetraising/graph.hpp"
#include "tetraising/rational.hpp"

namespace tetraising {

/// Half-integer spin stored as twice its value, so spin arithmetic is exact.
class Spin {
 public:
  constexpr Spin() = default;
  static Spin from_twice(int twice);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }

  friend constexpr bool operator==(Spin, Spin) = default;

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Six spins on the tetrahedron edges, indexed by edge id 1..6.
class TetraSpins {
 public:
  TetraSpins() = default;
  explicit TetraSpins(const std::array<int, 6>& twice);

  Spin operator[](int edge_id) const { return spins_.at(static_cast<std::size_t>(edge_id - 1)); }
  int twice(int edge_id) const { return (*this)[edge_id].twice(); }
  std::array<int, 6> twice_values() const;

  /// Swaps opposite edges 1<->4, 2<->5, 3<->6.
  TetraSpins opposite_swapped() const;
  /// Spins relabeled as out[perm[e]] = in[e] (perm is 1-based per edge).
  TetraSpins relabeled(const std::array<int, 6>& perm) const;

  friend bool operator==(const TetraSpins&, const TetraSpins&) = default;

 private:
  std::array<Spin, 6> spins_{};
};

/// Triads of edges meeting at the vertices of the tetrahedron graph.
inline constexpr std::array<std::array<int, 3>, 4> kTetraVertexTriads{{
    {1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}}};
/// 3-cycles (triangles) of the tetrahedron graph; 3-cycle t avoids the
/// vertex whose triad is the complement of t.
inline constexpr std::array<std::array<int, 3>, 4> kTetraTriangles{{
    {1, 2, 6}, {1, 3, 5}, {2, 3, 4}, {4, 5, 6}}};
/// 4-cycles: all edges except one opposite pair.
inline constexpr std::array<std::array<int, 4>, 3> kTetraSquares{{
    {1, 2, 4, 5}, {2, 3, 5, 6}, {1, 3, 4, 6}}};

/// |a-b| <= c <= a+b and a+b+c integer.
bool is_admissible(Spin a, Spin b, Spin c);
bool is_admissible(const TetraSpins& s);

/// (a+b+c+1)! / ((a+b-c)! (a-b+c)! (-a+b+c)!), the square of the triangle
/// coefficient. Throws InvalidArgument for an inadmissible triple.
ExactRational triangle_coeff_sq(Spin a, Spin b, Spin c);

/// prod_v Delta_v times the 6j-symbol, as the single Racah sum
///   sum_n (-1)^n (n+1)! / (prod_v (n - J_v)! prod_gamma (J_gamma - n)!)
/// over max J_v <= n <= min J_gamma, with J_v the spin sum at vertex v and
/// J_gamma the spin sum around 4-cycle gamma. This is the coefficient of
/// prod_e Y_e^{2 j_e} in 1 / P_T^2. Returns 0 on any inadmissible triad.
ExactRational racah_weight(const TetraSpins& s);
/// Integer form of racah_weight (the value is always an integer).
BigInt racah_weight_integer(const TetraSpins& s);

/// Floating 6j value: racah_weight / prod_v sqrt(Delta_v^2). Accurate for
/// large spins (the ratio is taken in the log domain). 0 if inadmissible.
double sixj(const TetraSpins& s);

/// Result of a truncated spin series together with the size of the next
/// shell, for a caller-side convergence judgement.
struct GenfunPartialSum {
  Complex value;
  Complex next_shell;   // terms with max 2j_e == cap + 1
  double tail_ratio;    // |next_shell| / |value|
};

/// Spin-network generating function truncated at every 2j_e <= cap. Only
/// built-in graphs are supported.
GenfunPartialSum genfun_partial_sum(const Graph& g, const Couplings& y, Spin cap);

/// Cross-polytope figurate number T(p, q), read off the series
///   Y (1-Y)^{p-1} / (1+Y)^{p+1} = sum_k (-1)^{k-1} T(p,k) Y^k.
BigInt figurate(int p, int q);
/// All T(p, 1..q_max) for one p, from a single series expansion.
std::vector<BigInt> figurate_row(int p, int q_max);
/// sum_{n=0}^{p-1} C(p-1, n) C(q+n, p); independent cross-check of figurate.
BigInt figurate_binomial(int p, int q);

/// True iff figurate(p, q) equals the coefficient of x^p y^q in
/// xy / ((1-y)(1-x-y-xy)) for every p + q <= order.
bool figurate_bivariate_check(int order);

struct FigurateTransform {
  ExactRational lhs_partial;  // 2^6 sum_{2j_e <= cap} W(j) prod_e (-1)^{2k_e} T(2j_e+1, 2k_e+1)
  ExactRational rhs;          // W(k with opposite edges swapped)
};

/// Truncated edgewise figurate transform of the Racah weights. The series
/// oscillates and does not converge termwise, so no equality is asserted.
FigurateTransform figurate_transform_partial(const TetraSpins& k, Spin j_cap);

/// lhs_partial for caps 0..max_cap, for Abel/Cesaro inspection.
std::vector<ExactRational> figurate_transform_sequence(const TetraSpins& k, Spin max_cap);

/// n! as a big integer, memoized; safe for concurrent callers.
const BigInt& factorial(int n);

}  // namespace tetraising
