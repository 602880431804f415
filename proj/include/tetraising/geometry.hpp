#pragma once

#include <array>

#include "tetraising/graph.hpp"
#include "tetraising/rational.hpp"
#include "tetraising/recoupling.hpp"

namespace tetraising {

// Chart of the dual tetrahedron T*. Edge e of T* crosses edge e of T, so the
// faces of T* are the vertex triads of T and the vertex triads of T* are the
// 3-cycles of T.
inline constexpr auto& kDualFaces = kTetraVertexTriads;
inline constexpr auto& kDualVertexTriads = kTetraTriangles;

struct TriangleLengths {
  std::array<Complex, 3> l{};
  const Complex& at(int a) const { return l.at(static_cast<std::size_t>(a - 1)); }
};

struct TetraLengths {
  std::array<Complex, 6> l{};

  static TetraLengths real(const std::array<double, 6>& lengths);
  /// Lengths j_e + shift.
  static TetraLengths from_spins(const TetraSpins& s, double shift);

  const Complex& at(int e) const { return l.at(static_cast<std::size_t>(e - 1)); }
  bool is_real() const;
  TetraLengths scaled(double lambda) const;
};

enum class ZeroProvenance { Geometric, Pregeometric, Triangle, Cevian };

struct ZeroSet {
  Couplings y;
  BuiltinGraph graph = BuiltinGraph::Tetra;
  int epsilon = 1;  // sign of the area / dihedral phase; -root for pre-geometric zeros
  int root = 0;     // +1 or -1 for the n root of a pre-geometric zero, else 0
  ZeroProvenance provenance = ZeroProvenance::Geometric;
};

std::string_view provenance_name(ZeroProvenance p);

/// |P(Y)| / (sum over cycles of prod |Y_e|), the empty cycle counting 1.
double verify_zero(const ZeroSet& z);

struct AngleData {
  Complex cos;
  Complex sin;
  Complex tan_half;
};

struct TriangleAngles {
  std::array<AngleData, 3> angle;  // angle[a-1] is opposite l_a
  Complex area;                    // eps * sqrt(s (s-l1)(s-l2)(s-l3))
  bool degenerate = false;         // zero area; sin and tan_half are then not set
};

/// Law of cosines and Heron, valid for complex lengths. For real lengths
/// obeying the triangle inequalities the angles lie in (0, pi).
TriangleAngles triangle_angles(const TriangleLengths& t, int eps = 1);

/// Roots of P_THETA: Y_a = i (s - l_b)(s - l_c) / area_eps, which is
/// i eps tan(phi_a / 2) for a real triangle.
ZeroSet triangle_zeros(const TriangleLengths& t, int eps);

using Point = std::array<double, 2>;

/// Roots of P_TRIANGLE from a real triangle ABC and a point O: with A' the
/// foot of the cevian AO on BC and 2 alpha the oriented angle BOC,
/// Y*_1 = -exp(2 i alpha) BA'/A'C (oriented ratio), cyclically. Without
/// phases the real roots -ratio remain.
ZeroSet cevian_zeros(const Point& a, const Point& b, const Point& c, const Point& o,
                     bool with_phases = true);

/// Squared volume from the edge lengths (valid for complex lengths).
Complex cayley_menger_vsq(const TetraLengths& t);

struct QuadraticCoeffs {
  Complex a, b, c;
};

/// Coefficients of a n^2 + b n + c = 0 whose roots parametrize the
/// pre-geometric zeros; b^2 - 4ac = -9 V^2.
QuadraticCoeffs quadratic_coeffs(const TetraLengths& t);

struct PregeometricData {
  Complex n;
  std::array<Complex, 4> m_triangle;  // n - s_{t*}, ordered as kTetraTriangles
  std::array<Complex, 3> m_square;    // s_gamma - n, ordered as kTetraSquares
  std::array<Complex, 6> y_squared;
  /// |prod m_triangle + n prod m_square|, relative to the larger term.
  double cycle_constraint_residual = 0.0;
};

/// root = +1 picks n = (-b + sqrt(b^2 - 4ac)) / 2a (principal root).
PregeometricData pregeometric_data(const TetraLengths& t, int root);

/// Zeros of P_T from the squares Y_e^2 = -M_{t1} M_{t2} / (n M_gamma), with
/// signs fixed so that every 3-cycle product equals -M_t / n. Of the gauge
/// copies (flipping the three edges at a vertex), the one with the largest
/// sum of Re Y is returned. For real lengths with V^2 > 0 the root +1
/// reproduces the geometric zero with eps = -1.
ZeroSet pregeometric_zeros(const TetraLengths& t, int root);

struct TetraAngles {
  /// opposite[e-1][k] is the angle opposite e in the k-th T* face holding e
  std::array<std::array<double, 2>, 6> opposite;
  std::array<double, 6> theta;  // external dihedral angle at each edge
  double volume_sq;
};

/// Requires real positive lengths, strict triangle inequalities on every
/// face of T* and V^2 > 0.
TetraAngles tetra_angles(const TetraLengths& t);

/// Y_e = exp(i eps theta_e / 2) sqrt(tan(phi1 / 2) tan(phi2 / 2)), with phi1,
/// phi2 the angles opposite e in the two T* faces holding e.
ZeroSet geometric_zeros(const TetraLengths& t, int eps);

}  // namespace tetraising
