#include "tetraising/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tetraising {

namespace {

constexpr Complex kI(0.0, 1.0);

double cross(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }
Point minus(const Point& u, const Point& v) { return {u[0] - v[0], u[1] - v[1]}; }

template <std::size_t N>
Complex semi_perimeter(const TetraLengths& t, const std::array<int, N>& edges) {
  Complex s = 0.0;
  for (int e : edges) s += t.at(e);
  return 0.5 * s;
}

double length_scale(const TetraLengths& t) {
  double m = 0.0;
  for (const auto& v : t.l) m = std::max(m, std::abs(v));
  return m;
}

// The two T* faces holding edge e, and the two edges sharing each face with e.
struct FacePair {
  std::array<int, 2> face;
  std::array<std::array<int, 2>, 2> others;
};

FacePair faces_of(int e) {
  FacePair out{};
  int k = 0;
  for (int f = 0; f < 4; ++f) {
    const auto& tri = kDualFaces[static_cast<std::size_t>(f)];
    if (std::find(tri.begin(), tri.end(), e) == tri.end()) continue;
    out.face[static_cast<std::size_t>(k)] = f;
    int m = 0;
    for (int x : tri)
      if (x != e) out.others[static_cast<std::size_t>(k)][static_cast<std::size_t>(m++)] = x;
    ++k;
  }
  return out;
}

// Edge completing the T* face that holds edges i and j.
int third_edge(int i, int j) {
  for (const auto& tri : kDualFaces) {
    const bool has_i = std::find(tri.begin(), tri.end(), i) != tri.end();
    const bool has_j = std::find(tri.begin(), tri.end(), j) != tri.end();
    if (has_i && has_j)
      for (int x : tri)
        if (x != i && x != j) return x;
  }
  throw InvalidArgument("edges do not share a face");
}

double law_of_cosines(double opposite, double b, double c) {
  return (b * b + c * c - opposite * opposite) / (2.0 * b * c);
}

}  // namespace

TetraLengths TetraLengths::real(const std::array<double, 6>& lengths) {
  TetraLengths t;
  for (std::size_t i = 0; i < 6; ++i) t.l[i] = lengths[i];
  return t;
}

TetraLengths TetraLengths::from_spins(const TetraSpins& s, double shift) {
  TetraLengths t;
  for (int e = 1; e <= 6; ++e) t.l[static_cast<std::size_t>(e - 1)] = s[e].value() + shift;
  return t;
}

bool TetraLengths::is_real() const {
  return std::all_of(l.begin(), l.end(), [](const Complex& v) { return v.imag() == 0.0; });
}

TetraLengths TetraLengths::scaled(double lambda) const {
  TetraLengths out = *this;
  for (auto& v : out.l) v *= lambda;
  return out;
}

std::string_view provenance_name(ZeroProvenance p) {
  switch (p) {
    case ZeroProvenance::Geometric: return "GEOMETRIC";
    case ZeroProvenance::Pregeometric: return "PREGEOMETRIC";
    case ZeroProvenance::Triangle: return "TRIANGLE";
    case ZeroProvenance::Cevian: return "CEVIAN";
  }
  return "";
}

double verify_zero(const ZeroSet& z) {
  const LoopPolynomial p = enumerate_cycles(builtin_graph(z.graph));
  return std::abs(p.evaluate(z.y)) / p.magnitude_scale(z.y);
}

TriangleAngles triangle_angles(const TriangleLengths& t, int eps) {
  if (eps != 1 && eps != -1) throw InvalidArgument("eps must be +1 or -1");
  for (const auto& v : t.l)
    if (v == Complex(0.0)) throw InvalidArgument("triangle lengths must be nonzero");
  const Complex s = 0.5 * (t.l[0] + t.l[1] + t.l[2]);
  TriangleAngles out;
  out.area = static_cast<double>(eps) * std::sqrt(s * (s - t.l[0]) * (s - t.l[1]) * (s - t.l[2]));
  out.degenerate = std::abs(out.area) <= 1e-14 * std::norm(s);
  for (std::size_t a = 0; a < 3; ++a) {
    const Complex la = t.l[a], lb = t.l[(a + 1) % 3], lc = t.l[(a + 2) % 3];
    AngleData& d = out.angle[a];
    d.cos = (lb * lb + lc * lc - la * la) / (2.0 * lb * lc);
    if (!out.degenerate) {
      d.sin = 2.0 * out.area / (lb * lc);
      d.tan_half = out.area / (s * (s - la));
    } else {
      d.sin = 0.0;
      d.tan_half = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

ZeroSet triangle_zeros(const TriangleLengths& t, int eps) {
  const TriangleAngles angles = triangle_angles(t, eps);
  if (angles.degenerate) throw PoleError("zero area: the triangle parametrization has a pole");
  const Complex s = 0.5 * (t.l[0] + t.l[1] + t.l[2]);
  Couplings y(3, 0.0);
  for (std::size_t a = 0; a < 3; ++a) {
    const Complex lb = t.l[(a + 1) % 3], lc = t.l[(a + 2) % 3];
    y.at(static_cast<int>(a) + 1) = kI * (s - lb) * (s - lc) / angles.area;
  }
  return {y, BuiltinGraph::Theta, eps, 0, ZeroProvenance::Triangle};
}

ZeroSet cevian_zeros(const Point& a, const Point& b, const Point& c, const Point& o,
                     bool with_phases) {
  const double scale = std::max({std::hypot(b[0] - a[0], b[1] - a[1]),
                                 std::hypot(c[0] - b[0], c[1] - b[1]),
                                 std::hypot(a[0] - c[0], a[1] - c[1])});
  const double tol = 1e-12 * scale * scale;
  if (std::abs(cross(minus(b, a), minus(c, a))) <= tol)
    throw DegenerateError("triangle vertices are collinear");
  const std::array<Point, 3> v{a, b, c};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % 3];
    if (std::abs(cross(minus(q, p), minus(o, p))) <= tol)
      throw DegenerateError("O lies on a line through two vertices");
  }

  Couplings y(3, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    // cevian from P through O meets the side QR at Q + t (R - Q)
    const Point& p = v[i];
    const Point& q = v[(i + 1) % 3];
    const Point& r = v[(i + 2) % 3];
    const Point d1 = minus(o, p), d2 = minus(r, q), w = minus(q, p);
    const double det = -cross(d1, d2);
    if (std::abs(det) <= tol) throw DegenerateError("cevian is parallel to the opposite side");
    const double t = cross(d1, w) / det;
    Complex value = -t / (1.0 - t);
    if (with_phases) {
      const Complex oq(q[0] - o[0], q[1] - o[1]), orr(r[0] - o[0], r[1] - o[1]);
      value *= std::polar(1.0, std::arg(orr / oq));
    }
    y.at(static_cast<int>(i) + 1) = value;
  }
  return {y, BuiltinGraph::Triangle, 1, 0, ZeroProvenance::Cevian};
}

Complex cayley_menger_vsq(const TetraLengths& t) {
  std::array<Complex, 7> L{};
  for (int e = 1; e <= 6; ++e) L[static_cast<std::size_t>(e)] = t.at(e) * t.at(e);
  const Complex opposite_terms =
      L[1] * L[4] * (L[2] + L[5] + L[3] + L[6] - L[1] - L[4]) +
      L[2] * L[5] * (L[1] + L[4] + L[3] + L[6] - L[2] - L[5]) +
      L[3] * L[6] * (L[1] + L[4] + L[2] + L[5] - L[3] - L[6]);
  Complex face_terms = 0.0;
  for (const auto& f : kDualFaces)
    face_terms += L[static_cast<std::size_t>(f[0])] * L[static_cast<std::size_t>(f[1])] *
                  L[static_cast<std::size_t>(f[2])];
  return (opposite_terms - face_terms) / 144.0;
}

QuadraticCoeffs quadratic_coeffs(const TetraLengths& t) {
  const Complex pairs = t.at(1) * t.at(4) + t.at(2) * t.at(5) + t.at(3) * t.at(6);
  Complex total = 0.0;
  for (const auto& v : t.l) total += v;
  Complex face_products = 0.0, c = 1.0;
  for (const auto& f : kDualFaces) {
    face_products += t.at(f[0]) * t.at(f[1]) * t.at(f[2]);
    c *= semi_perimeter(t, f);
  }
  return {0.5 * pairs, -0.25 * pairs * total - 0.25 * face_products, c};
}

PregeometricData pregeometric_data(const TetraLengths& t, int root) {
  if (root != 1 && root != -1) throw InvalidArgument("root must be +1 or -1");
  for (const auto& v : t.l)
    if (v == Complex(0.0)) throw InvalidArgument("lengths must be nonzero");
  const double scale = length_scale(t);
  const QuadraticCoeffs q = quadratic_coeffs(t);
  if (std::abs(q.a) <= 1e-14 * scale * scale)
    throw DegenerateError("a = 0: the quadratic for n degenerates");

  PregeometricData out;
  out.n = (-q.b + static_cast<double>(root) * std::sqrt(q.b * q.b - 4.0 * q.a * q.c)) / (2.0 * q.a);
  if (std::abs(out.n) <= 1e-14 * scale) throw PoleError("n = 0 is a pole of the parametrization");

  for (std::size_t k = 0; k < 4; ++k) {
    // the T* face opposite to the 3-cycle: swap every edge with its opposite
    std::array<int, 3> opp{};
    for (std::size_t i = 0; i < 3; ++i) {
      const int e = kTetraTriangles[k][i];
      opp[i] = e <= 3 ? e + 3 : e - 3;
    }
    out.m_triangle[k] = out.n - semi_perimeter(t, opp);
  }
  for (std::size_t g = 0; g < 3; ++g) {
    out.m_square[g] = semi_perimeter(t, kTetraSquares[g]) - out.n;
    if (std::abs(out.m_square[g]) <= 1e-14 * scale)
      throw PoleError("n = s_gamma is a pole of the parametrization");
  }

  for (int e = 1; e <= 6; ++e) {
    Complex num = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& tri = kTetraTriangles[k];
      if (std::find(tri.begin(), tri.end(), e) != tri.end()) num *= out.m_triangle[k];
    }
    Complex m_gamma = 0.0;
    for (std::size_t g = 0; g < 3; ++g) {
      const auto& sq = kTetraSquares[g];
      if (std::find(sq.begin(), sq.end(), e) == sq.end()) m_gamma = out.m_square[g];
    }
    out.y_squared[static_cast<std::size_t>(e - 1)] = -num / (out.n * m_gamma);
  }

  Complex prod_t = 1.0, prod_g = 1.0;
  for (const auto& m : out.m_triangle) prod_t *= m;
  for (const auto& m : out.m_square) prod_g *= m;
  const double denom = std::max(std::abs(prod_t), std::abs(out.n * prod_g));
  out.cycle_constraint_residual = denom > 0.0 ? std::abs(prod_t + out.n * prod_g) / denom : 0.0;
  return out;
}

ZeroSet pregeometric_zeros(const TetraLengths& t, int root) {
  const PregeometricData d = pregeometric_data(t, root);
  std::array<Complex, 6> base{};
  for (std::size_t e = 0; e < 6; ++e) base[e] = std::sqrt(d.y_squared[e]);

  std::array<Complex, 4> target{};
  double target_scale = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    target[k] = -d.m_triangle[k] / d.n;
    target_scale = std::max(target_scale, std::abs(target[k]));
  }
  const double tie = 1e-9 * (1.0 + target_scale);

  // 64 sign vectors: match the 3-cycle products, then prefer larger sum Re Y
  double best_err = std::numeric_limits<double>::infinity();
  double best_re = -std::numeric_limits<double>::infinity();
  std::array<Complex, 6> best{};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::array<Complex, 6> y{};
    double re = 0.0;
    for (std::size_t e = 0; e < 6; ++e) {
      y[e] = (mask >> e) & 1u ? -base[e] : base[e];
      re += y[e].real();
    }
    double err = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      Complex prod = 1.0;
      for (int e : kTetraTriangles[k]) prod *= y[static_cast<std::size_t>(e - 1)];
      err += std::abs(prod - target[k]);
    }
    if (err < best_err - tie || (err <= best_err + tie && re > best_re + 1e-12)) {
      best_err = std::min(err, best_err);
      best_re = re;
      best = y;
    }
  }
  return {Couplings(std::vector<Complex>(best.begin(), best.end())), BuiltinGraph::Tetra, -root, root,
          ZeroProvenance::Pregeometric};
}

TetraAngles tetra_angles(const TetraLengths& t) {
  std::array<double, 6> l{};
  for (int e = 1; e <= 6; ++e) {
    const Complex v = t.at(e);
    if (v.imag() != 0.0 || !(v.real() > 0.0))
      throw InvalidArgument("geometric zeros need real positive lengths");
    l[static_cast<std::size_t>(e - 1)] = v.real();
  }
  auto len = [&](int e) { return l[static_cast<std::size_t>(e - 1)]; };
  for (const auto& f : kDualFaces) {
    const double a = len(f[0]), b = len(f[1]), c = len(f[2]);
    if (!(a < b + c && b < a + c && c < a + b))
      throw DomainError("a face violates the strict triangle inequality");
  }

  TetraAngles out{};
  out.volume_sq = cayley_menger_vsq(t).real();
  const double scale = length_scale(t);
  if (std::abs(out.volume_sq) <= 1e-13 * std::pow(scale, 6))
    throw DegenerateError("flat tetrahedron: V^2 = 0");
  if (out.volume_sq < 0.0)
    throw LorentzianRegime("V^2 < 0: no Euclidean tetrahedron with these lengths");

  // 2d angle between edges i and j inside their common face
  auto face_cos = [&](int i, int j) { return law_of_cosines(len(third_edge(i, j)), len(i), len(j)); };

  for (int e = 1; e <= 6; ++e) {
    const FacePair fp = faces_of(e);
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& o = fp.others[k];
      out.opposite[static_cast<std::size_t>(e - 1)][k] =
          std::acos(std::clamp(law_of_cosines(len(e), len(o[0]), len(o[1])), -1.0, 1.0));
    }
    // any T* vertex holding e; its other two edges j, k
    for (const auto& tri : kDualVertexTriads) {
      if (std::find(tri.begin(), tri.end(), e) == tri.end()) continue;
      std::array<int, 2> jk{};
      int m = 0;
      for (int x : tri)
        if (x != e) jk[static_cast<std::size_t>(m++)] = x;
      const double c_ej = face_cos(e, jk[0]), c_ek = face_cos(e, jk[1]);
      const double c_jk = face_cos(jk[0], jk[1]);
      const double s_ej = std::sqrt(std::max(0.0, 1.0 - c_ej * c_ej));
      const double s_ek = std::sqrt(std::max(0.0, 1.0 - c_ek * c_ek));
      const double cos_theta = (c_ej * c_ek - c_jk) / (s_ej * s_ek);
      out.theta[static_cast<std::size_t>(e - 1)] = std::acos(std::clamp(cos_theta, -1.0, 1.0));
      break;
    }
  }
  return out;
}

ZeroSet geometric_zeros(const TetraLengths& t, int eps) {
  if (eps != 1 && eps != -1) throw InvalidArgument("eps must be +1 or -1");
  const TetraAngles angles = tetra_angles(t);
  Couplings y(6, 0.0);
  for (std::size_t e = 0; e < 6; ++e) {
    const auto& phi = angles.opposite[e];
    const double modulus = std::sqrt(std::tan(0.5 * phi[0]) * std::tan(0.5 * phi[1]));
    y.at(static_cast<int>(e) + 1) = std::polar(modulus, 0.5 * eps * angles.theta[e]);
  }
  return {y, BuiltinGraph::Tetra, eps, 0, ZeroProvenance::Geometric};
}

}  // namespace tetraising
