#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tetraising/geometry.hpp"

using namespace tetraising;

namespace {

TetraLengths equilateral() { return TetraLengths::real({1, 1, 1, 1, 1, 1}); }

std::array<Complex, 6> as_array(const TetraLengths& t) { return t.l; }

double p_abs(BuiltinGraph g, const Couplings& y) { return std::abs(enumerate_cycles(builtin_graph(g)).evaluate(y)); }

}  // namespace

TEST(TriangleAngles, RightTriangle) {
  const TriangleAngles a = triangle_angles({{3.0, 4.0, 5.0}});
  EXPECT_FALSE(a.degenerate);
  EXPECT_NEAR(a.area.real(), 6.0, 1e-14);
  EXPECT_NEAR(a.angle[2].cos.real(), 0.0, 1e-15);
  EXPECT_NEAR(a.angle[0].sin.real(), 0.6, 1e-15);
  EXPECT_NEAR(a.angle[0].tan_half.real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(a.angle[1].tan_half.real(), 0.5, 1e-15);
  EXPECT_NEAR(triangle_angles({{3.0, 4.0, 5.0}}, -1).area.real(), -6.0, 1e-14);
  EXPECT_TRUE(triangle_angles({{1.0, 2.0, 3.0}}).degenerate);
  EXPECT_THROW(triangle_angles({{1.0, 0.0, 1.0}}), InvalidArgument);
}

TEST(TriangleZeros, RightTriangle) {
  const ZeroSet z = triangle_zeros({{3.0, 4.0, 5.0}}, 1);
  EXPECT_EQ(z.graph, BuiltinGraph::Theta);
  EXPECT_NEAR(std::abs(z.y.at(1) - Complex(0, 1.0 / 3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z.y.at(2) - Complex(0, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z.y.at(3) - Complex(0, 1.0)), 0.0, 1e-15);
  EXPECT_LT(verify_zero(z), 1e-14);
  const ZeroSet w = triangle_zeros({{3.0, 4.0, 5.0}}, -1);
  for (int a = 1; a <= 3; ++a) EXPECT_NEAR(std::abs(w.y.at(a) - std::conj(z.y.at(a))), 0.0, 1e-15);
  EXPECT_THROW(triangle_zeros({{1.0, 2.0, 3.0}}, 1), PoleError);
}

TEST(TriangleZeros, RandomAndComplex) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.1, 3.0), v(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    TriangleLengths t{{Complex(u(rng), v(rng)), Complex(u(rng), v(rng)), Complex(u(rng), v(rng))}};
    if (trial % 2 == 0)
      for (auto& x : t.l) x = x.real();
    try {
      for (int eps : {1, -1}) {
        const ZeroSet z = triangle_zeros(t, eps);
        EXPECT_LT(verify_zero(z), 1e-12);
        // real triangles: the duality image of each zero is a pure phase
        bool real_triangle = trial % 2 == 0;
        for (int a = 1; a <= 3; ++a)
          if (real_triangle && z.y.at(a).real() == 0.0 && std::abs(triangle_angles(t).area.imag()) < 1e-12)
            EXPECT_NEAR(std::abs(duality_map(z.y.at(a))), 1.0, 1e-12);
      }
    } catch (const PoleError&) {
    }
  }
}

TEST(CevianZeros, CentroidAndGeneral) {
  const Point a{0, 0}, b{4, 0}, c{1, 3};
  const Point centroid{5.0 / 3.0, 1.0};
  const ZeroSet plain = cevian_zeros(a, b, c, centroid, false);
  EXPECT_EQ(plain.graph, BuiltinGraph::Triangle);
  for (int k = 1; k <= 3; ++k) EXPECT_NEAR(std::abs(plain.y.at(k) + 1.0), 0.0, 1e-12);
  EXPECT_LT(verify_zero(plain), 1e-12);

  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int checked = 0;
  while (checked < 100) {
    const Point o{u(rng), u(rng)};
    try {
      const ZeroSet with = cevian_zeros(a, b, c, o, true);
      const ZeroSet without = cevian_zeros(a, b, c, o, false);
      EXPECT_LT(verify_zero(with), 1e-10);
      EXPECT_LT(verify_zero(without), 1e-10);  // Ceva
      for (int k = 1; k <= 3; ++k) EXPECT_NEAR(std::abs(with.y.at(k)), std::abs(without.y.at(k)), 1e-10);
      ++checked;
    } catch (const DegenerateError&) {
    }
  }
  EXPECT_THROW(cevian_zeros(a, b, Point{8, 0}, centroid), DegenerateError);
  EXPECT_THROW(cevian_zeros(a, b, c, Point{2, 0}), DegenerateError);
}

TEST(Volume, MatchesCayleyMenger) {
  EXPECT_NEAR(cayley_menger_vsq(equilateral()).real(), 1.0 / 72.0, 1e-15);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tet = oracle::random_tetrahedron(rng);
    const TetraLengths t = TetraLengths::real(tet.lengths);
    const Complex vsq = cayley_menger_vsq(t);
    EXPECT_NEAR(std::abs(288.0 * vsq - oracle::cayley_menger_288(as_array(t))), 0.0, 1e-12);
  }
  std::uniform_real_distribution<double> u(0.2, 2.0), v(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    TetraLengths t;
    for (auto& x : t.l) x = Complex(u(rng), v(rng));
    const Complex ref = oracle::cayley_menger_288(as_array(t));
    EXPECT_LT(std::abs(288.0 * cayley_menger_vsq(t) - ref), 1e-11 * (1.0 + std::abs(ref)));
  }
}

TEST(Quadratic, DiscriminantIsVolume) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.2, 2.0), v(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    TetraLengths t;
    for (auto& x : t.l) x = Complex(u(rng), trial % 2 ? v(rng) : 0.0);
    const QuadraticCoeffs q = quadratic_coeffs(t);
    const Complex disc = q.b * q.b - 4.0 * q.a * q.c;
    const Complex target = -9.0 * cayley_menger_vsq(t);
    EXPECT_LT(std::abs(disc - target), 1e-11 * (1.0 + std::abs(q.b * q.b)));
  }
}

TEST(Pregeometric, ZerosForComplexLengths) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(0.2, 2.0), v(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    TetraLengths t;
    for (auto& x : t.l) x = Complex(u(rng), v(rng));
    for (int root : {1, -1}) {
      try {
        const PregeometricData d = pregeometric_data(t, root);
        EXPECT_LT(d.cycle_constraint_residual, 1e-10);
        Complex sum = 0.0;
        for (const Complex& m : d.m_triangle) sum += m;
        for (const Complex& m : d.m_square) sum += m;
        EXPECT_LT(std::abs(sum - d.n), 1e-10 * (1.0 + std::abs(d.n)));
        const ZeroSet z = pregeometric_zeros(t, root);
        EXPECT_EQ(z.provenance, ZeroProvenance::Pregeometric);
        EXPECT_EQ(z.root, root);
        EXPECT_EQ(z.epsilon, -root);
        EXPECT_LT(verify_zero(z), 1e-9);
      } catch (const PoleError&) {
      }
    }
  }
}

TEST(Pregeometric, ScaleInvariant) {
  const TetraLengths t = TetraLengths::real({1.1, 0.9, 1.3, 1.0, 1.2, 0.8});
  for (int root : {1, -1}) {
    const ZeroSet a = pregeometric_zeros(t, root);
    const ZeroSet b = pregeometric_zeros(t.scaled(7.5), root);
    for (int e = 1; e <= 6; ++e) EXPECT_NEAR(std::abs(a.y.at(e) - b.y.at(e)), 0.0, 1e-12);
  }
}

TEST(Pregeometric, MatchesGeometric) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tet = oracle::random_tetrahedron(rng);
    const TetraLengths t = TetraLengths::real(tet.lengths);
    ZeroSet g, p, gp, pm;
    try {
      g = geometric_zeros(t, -1);
      gp = geometric_zeros(t, 1);
      p = pregeometric_zeros(t, 1);
      pm = pregeometric_zeros(t, -1);
    } catch (const DomainError&) {
      continue;
    }
    for (int e = 1; e <= 6; ++e) {
      EXPECT_NEAR(std::abs(g.y.at(e) - p.y.at(e)), 0.0, 1e-8 * (1.0 + std::abs(g.y.at(e))));
      EXPECT_NEAR(std::abs(gp.y.at(e) - pm.y.at(e)), 0.0, 1e-8 * (1.0 + std::abs(gp.y.at(e))));
    }
  }
}

TEST(Geometric, Equilateral) {
  const Complex yp(1.0 / 3.0, std::sqrt(2.0) / 3.0);
  const ZeroSet z = geometric_zeros(equilateral(), 1);
  for (int e = 1; e <= 6; ++e) EXPECT_NEAR(std::abs(z.y.at(e) - yp), 0.0, 1e-14);
  const ZeroSet w = geometric_zeros(equilateral(), -1);
  for (int e = 1; e <= 6; ++e) EXPECT_NEAR(std::abs(w.y.at(e) - std::conj(yp)), 0.0, 1e-14);
  EXPECT_LT(verify_zero(z), 1e-14);
  const TetraAngles a = tetra_angles(equilateral());
  for (double th : a.theta) EXPECT_NEAR(th, std::acos(-1.0 / 3.0), 1e-14);
  EXPECT_NEAR(a.volume_sq, 1.0 / 72.0, 1e-15);
}

TEST(Geometric, DihedralAnglesMatchEmbedding) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const auto tet = oracle::random_tetrahedron(rng);
    TetraAngles a;
    try {
      a = tetra_angles(TetraLengths::real(tet.lengths));
    } catch (const DomainError&) {
      continue;
    }
    for (std::size_t e = 0; e < 6; ++e) EXPECT_NEAR(a.theta[e], tet.theta[e], 1e-7);
    for (int eps : {1, -1}) {
      const ZeroSet z = geometric_zeros(TetraLengths::real(tet.lengths), eps);
      EXPECT_LT(verify_zero(z), 1e-10);
      for (int e = 1; e <= 6; ++e)
        EXPECT_NEAR(std::arg(z.y.at(e)), eps * tet.theta[static_cast<std::size_t>(e - 1)] / 2, 1e-7);
    }
  }
}

TEST(Geometric, BranchesConjugate) {
  const TetraLengths t = TetraLengths::real({1.1, 0.9, 1.3, 1.0, 1.2, 0.8});
  const ZeroSet a = geometric_zeros(t, 1), b = geometric_zeros(t, -1);
  for (int e = 1; e <= 6; ++e) EXPECT_NEAR(std::abs(a.y.at(e) - std::conj(b.y.at(e))), 0.0, 1e-15);
  const ZeroSet c = geometric_zeros(t.scaled(3.0), 1);
  for (int e = 1; e <= 6; ++e) EXPECT_NEAR(std::abs(a.y.at(e) - c.y.at(e)), 0.0, 1e-13);
}

TEST(Geometric, DualPolynomialVanishesOnDualZero) {
  const TetraLengths t = TetraLengths::real({1.1, 0.9, 1.3, 1.0, 1.2, 0.8});
  const ZeroSet z = geometric_zeros(t, 1);
  EXPECT_LT(p_abs(BuiltinGraph::TetraDual, duality_map(z.y)), 1e-12);
}

TEST(Geometric, Errors) {
  EXPECT_THROW(geometric_zeros(TetraLengths::real({1, 1, 1, 1, 1, 0}), 1), InvalidArgument);
  EXPECT_THROW(geometric_zeros(TetraLengths::real({1, 1, 3, 1, 1, 1}), 1), DomainError);
  // faces fine, but no Euclidean embedding
  EXPECT_THROW(geometric_zeros(TetraLengths::real({1.9, 1.9, 1, 1.9, 1, 1}), 1), LorentzianRegime);
  EXPECT_THROW(geometric_zeros(equilateral(), 0), InvalidArgument);
}
