// One PASS/FAIL line per acceptance criterion; exit status counts failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tetraising/asymptotics.hpp"
#include "tetraising/geometry.hpp"
#include "tetraising/ising.hpp"
#include "tetraising/recoupling.hpp"

using namespace tetraising;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double budget_ms, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = ms <= budget_ms;
  const bool pass = out.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.1f ms, budget %.0f ms%s)\n", pass ? "PASS" : "FAIL", id, name,
              out.detail.c_str(), ms, budget_ms, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const Complex kYPlus(1.0 / 3.0, std::sqrt(2.0) / 3.0);

ExactRational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 13);
  return make_rational(num(rng), den(rng));
}

ExactCouplings rand_exact(std::mt19937_64& rng, int edges, std::initializer_list<int> avoid) {
  std::vector<ExactRational> v;
  while (static_cast<int>(v.size()) < edges) {
    ExactRational r = rand_rational(rng);
    bool bad = false;
    for (int a : avoid) bad = bad || r == a;
    if (!bad) v.push_back(r);
  }
  return ExactCouplings(v);
}

HyperbolicCouplings rand_pairs(std::mt19937_64& rng, int edges) {
  std::uniform_int_distribution<int> d(1, 12);
  std::vector<HyperbolicPair> v;
  for (int e = 0; e < edges; ++e) v.push_back(HyperbolicPair::from_exp(make_rational(d(rng), d(rng))));
  return HyperbolicCouplings(v);
}

Outcome criterion1() {
  double worst = 0.0, p = 0.0;
  for (int eps : {1, -1}) {
    const ZeroSet z = geometric_zeros(TetraLengths::real({1, 1, 1, 1, 1, 1}), eps);
    const Complex target = eps == 1 ? kYPlus : std::conj(kYPlus);
    for (int e = 1; e <= 6; ++e) worst = std::max(worst, std::abs(z.y.at(e) - target));
    p = std::max(p, std::abs(enumerate_cycles(builtin_graph("TETRA")).evaluate(z.y)));
  }
  return {worst < 1e-12 && p < 1e-14, "max |Y - (1 +- i sqrt2)/3| = " + fmt("%.2e", worst) + ", |P_T| = " + fmt("%.2e", p)};
}

Outcome criterion2() {
  const LoopPolynomial p = enumerate_cycles(builtin_graph("TETRA"));
  // a quartic agreeing with (Y+1)^2 (3Y^2 - 2Y + 1) at 21 points is that product
  bool exact = true;
  for (int k = -10; k <= 10; ++k) {
    const ExactRational y = make_rational(k, 3);
    const ExactRational value = p.evaluate(ExactCouplings(6, y));
    exact = exact && value == 1 + 4 * y * y * y + 3 * y * y * y * y;
    exact = exact && value == (y + 1) * (y + 1) * (3 * y * y - 2 * y + 1);
  }
  auto q = [&](Complex y) { return std::abs(p.evaluate(Couplings(6, y))); };
  // roots of the quadratic factor by the quadratic formula
  const Complex disc = std::sqrt(Complex(4.0 - 12.0, 0.0));
  const Complex r1 = (2.0 + disc) / 6.0, r2 = (2.0 - disc) / 6.0;
  const double root_err = std::max(std::abs(r1 - kYPlus), std::abs(r2 - std::conj(kYPlus)));
  const double worst = std::max({q(-1.0), q(kYPlus), q(std::conj(kYPlus))});
  return {exact && root_err < 1e-12 && worst < 1e-12,
          std::string("exact factorization on 21 rationals: ") + (exact ? "yes" : "no") +
              ", root error " + fmt("%.2e", root_err) + ", max |P| at roots " + fmt("%.2e", worst)};
}

Outcome criterion3() {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<const char*, BuiltinGraph>> graphs{{"THETA", BuiltinGraph::Theta},
                                                                 {"TRIANGLE", BuiltinGraph::Triangle},
                                                                 {"TETRA", BuiltinGraph::Tetra},
                                                                 {"TETRA_DUAL", BuiltinGraph::TetraDual}};
  int checks = 0, bad = 0;
  auto count = [&](const ExactRational& r) {
    ++checks;
    if (r != 0) ++bad;
  };
  for (int trial = 0; trial < 20; ++trial) {
    for (const auto& [name, kind] : graphs) {
      const Graph g = builtin_graph(kind);
      count(check_high_temp(g, rand_pairs(rng, g.edge_count())));
      count(check_low_temp(g, rand_pairs(rng, g.edge_count())));
      const ExactCouplings y = rand_exact(rng, g.edge_count(), {-1});
      count(check_duality_on_p(g, y, DualityDirection::Forward));
      count(check_duality_on_p(g, y, DualityDirection::Backward));
    }
    for (BuiltinGraph kind : {BuiltinGraph::Theta, BuiltinGraph::Tetra}) {
      const Graph g = builtin_graph(kind);
      ExactCouplings y = rand_exact(rng, g.edge_count(), {1, -1});
      while (enumerate_cycles(g).evaluate(y) == 0) y = rand_exact(rng, g.edge_count(), {1, -1});
      count(check_westbury(g, y));
    }
    count(self_duality_residual(rand_exact(rng, 6, {-1})));
  }
  return {bad == 0, std::to_string(checks) + " exact residuals, " + std::to_string(bad) + " nonzero"};
}

TetraLengths random_lengths(std::mt19937_64& rng, bool complex_lengths) {
  std::uniform_real_distribution<double> u(0.3, 2.0), v(-1.0, 1.0);
  TetraLengths t;
  for (auto& x : t.l) x = complex_lengths ? Complex(u(rng), v(rng)) : Complex(u(rng), 0.0);
  return t;
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  const LoopPolynomial pdual = enumerate_cycles(builtin_graph("TETRA_DUAL"));
  int accepted = 0, rejected = 0;
  double worst = 0.0, worst_dual = 0.0;
  while (accepted < 100) {
    const TetraLengths t = random_lengths(rng, false);
    try {
      tetra_angles(t);
    } catch (const DomainError&) {
      ++rejected;
      continue;
    }
    ++accepted;
    for (int eps : {1, -1}) {
      const ZeroSet z = geometric_zeros(t, eps);
      worst = std::max(worst, verify_zero(z));
      const Couplings d = duality_map(z.y);
      worst_dual = std::max(worst_dual, std::abs(pdual.evaluate(d)) / pdual.magnitude_scale(d));
    }
  }
  return {worst < 1e-10 && worst_dual < 1e-10, "100 tetrahedra (" + std::to_string(rejected) +
                                                    " rejected), max residual " + fmt("%.2e", worst) +
                                                    ", dual " + fmt("%.2e", worst_dual)};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  int accepted = 0, poles = 0;
  double worst = 0.0, worst_cycle = 0.0;
  while (accepted < 100) {
    const TetraLengths t = random_lengths(rng, true);
    try {
      for (int root : {1, -1}) {
        const PregeometricData d = pregeometric_data(t, root);
        worst_cycle = std::max(worst_cycle, d.cycle_constraint_residual);
        worst = std::max(worst, verify_zero(pregeometric_zeros(t, root)));
      }
    } catch (const PoleError&) {
      ++poles;
      continue;
    }
    ++accepted;
  }
  return {worst < 1e-10 && worst_cycle < 1e-10, "100 complex sextuples (" + std::to_string(poles) +
                                                     " near poles skipped), max residual " + fmt("%.2e", worst) +
                                                     ", cycle constraint " + fmt("%.2e", worst_cycle)};
}

Outcome criterion6() {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const TetraLengths t = random_lengths(rng, trial % 2 == 1);
    const QuadraticCoeffs q = quadratic_coeffs(t);
    const Complex disc = q.b * q.b - 4.0 * q.a * q.c;
    const Complex target = -9.0 * cayley_menger_vsq(t);
    // relative to the size of the cancelling terms
    const double scale = std::max({std::abs(q.b * q.b), std::abs(4.0 * q.a * q.c), std::abs(target)});
    worst = std::max(worst, std::abs(disc - target) / scale);
  }
  return {worst < 1e-12, "1000 sextuples, max relative |b^2 - 4ac + 9V^2| = " + fmt("%.2e", worst)};
}

Outcome criterion7() {
  const int max_degree = 12;
  const auto coeffs = oracle::inverse_square_coefficients(max_degree);
  long checked = 0, bad = 0;
  std::array<int, 6> t{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == 6) {
      const auto it = coeffs.find(t);
      const BigInt expected = it == coeffs.end() ? BigInt(0) : it->second;
      if (racah_weight(TetraSpins(t)) != ExactRational(expected)) ++bad;
      ++checked;
      return;
    }
    for (int v = 0; used + v <= max_degree; ++v) {
      t[i] = v;
      rec(i + 1, used + v);
    }
    t[i] = 0;
  };
  rec(0, 0);
  return {bad == 0, std::to_string(checked) + " sextuples with total twice-spin <= 12, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome criterion8() {
  bool ok = true;
  for (int p = 1; p <= 40; ++p) {
    const auto row = figurate_row(p, 40);
    ok = ok && row[0] == 1 && figurate(1, p) == p;
    for (int q = 1; q <= 40; ++q) {
      ok = ok && p * row[static_cast<std::size_t>(q - 1)] == q * figurate(q, p);
      ok = ok && row[static_cast<std::size_t>(q - 1)] == figurate_binomial(p, q);
    }
  }
  const bool bivariate = figurate_bivariate_check(30);
  bool monotone = true;
  double previous = 0.0, last = 0.0;
  for (int p = 20; p <= 100; ++p) {
    const double r = std::log(figurate(p, 11).get_d()) / std::log(p);
    monotone = monotone && r < 11.0 && r > previous;
    previous = last = r;
  }
  return {ok && bivariate && monotone, std::string("table p,q <= 40: ") + (ok ? "ok" : "bad") +
                                           ", bivariate order 30: " + (bivariate ? "ok" : "bad") +
                                           ", ln T(p,11)/ln p increasing to " + fmt("%.4f", last) + " < 11"};
}

Outcome criterion9() {
  std::mt19937_64 rng(9);
  const LoopPolynomial pt = enumerate_cycles(builtin_graph("TETRA"));
  const LoopPolynomial pth = enumerate_cycles(builtin_graph("THETA"));
  const LoopPolynomial ptri = enumerate_cycles(builtin_graph("TRIANGLE"));
  bool exact = true;
  for (int trial = 0; trial < 50; ++trial) {
    const ExactRational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
    exact = exact && pt.evaluate(ExactCouplings({a, b, c, 1, 1, 1})) == 2 * pth.evaluate(ExactCouplings({a, b, c}));
    exact = exact && pt.evaluate(ExactCouplings({0, 0, 0, a, b, c})) == ptri.evaluate(ExactCouplings({a, b, c}));
  }
  std::uniform_real_distribution<double> u(0.05, 3.0);
  double worst = 0.0, worst_pachner = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> v;
    for (int e = 0; e < 6; ++e) v.push_back(u(rng));
    const Couplings y(v);
    const double ref = std::abs(pt.evaluate(y));
    worst = std::max(worst, std::abs(pt.evaluate(scissor_transform(y)) - pt.evaluate(y)) / ref);
    const auto r = pachner_reduce(y);
    worst_pachner = std::max(worst_pachner, std::abs(r.factor * pth.evaluate(r.reduced) - pt.evaluate(y)) / ref);
  }
  return {exact && worst < 1e-12 && worst_pachner < 1e-12,
          std::string("exact special cases: ") + (exact ? "ok" : "bad") + ", scissor " + fmt("%.2e", worst) +
              ", general Pachner " + fmt("%.2e", worst_pachner)};
}

// Calibrated once against the exact 6j (measured RMS about 2e-3) and frozen.
constexpr double kPrThreshold = 0.01;

Outcome criterion10() {
  const TetraSpins base({2, 2, 2, 2, 2, 2});
  const double full = relative_rms_error(asymptotic_sweep(base, 20, 50));
  const double low = relative_rms_error(asymptotic_sweep(base, 20, 35));
  const double high = relative_rms_error(asymptotic_sweep(base, 35, 50));
  const double unshifted = relative_rms_error(asymptotic_sweep(base, 20, 50, 0.0));
  const bool ok = full < kPrThreshold && high < low && full < unshifted;
  return {ok, "relative RMS " + fmt("%.2e", full) + " (threshold " + fmt("%.2g", kPrThreshold) + "), j in [20,35] " +
                  fmt("%.2e", low) + " vs [35,50] " + fmt("%.2e", high) + ", unshifted " + fmt("%.2e", unshifted)};
}

double worst_saddle(const TetraSpins& base, int k) {
  std::array<int, 6> t = base.twice_values();
  for (auto& x : t) x *= k;
  const TetraSpins s(t);
  double out = 0.0;
  for (int eps : {1, -1})
    for (const auto& r : saddle_residual(s, saddle_couplings(s, -eps), eps))
      out = std::max({out, std::abs(r.real_part), std::abs(r.phase)});
  return out;
}

Outcome criterion11() {
  const TetraSpins base({5, 5, 4, 4, 6, 7});
  const double r100 = worst_saddle(base, 100);
  const double r1000 = worst_saddle(base, 1000);
  const double ratio = r100 / r1000;
  const bool ok = r100 < 1e-3 && ratio > 5.0 && ratio < 20.0;
  return {ok, "max residual " + fmt("%.2e", r100) + " at x100, " + fmt("%.2e", r1000) + " at x1000 (ratio " +
                  fmt("%.1f", ratio) + ")"};
}

Outcome criterion12() {
  // the partial sums are emitted for inspection; the identity itself is
  // covered by the resummed self-duality of criterion 3
  const TetraSpins k({2, 2, 2, 2, 2, 2});
  const auto seq = figurate_transform_sequence(k, Spin::from_twice(8));
  const auto last = figurate_transform_partial(k, Spin::from_twice(8));
  std::ostringstream os;
  os << "partial sums";
  for (const auto& v : seq) os << ' ' << v.get_str();
  os << " vs rhs " << last.rhs.get_str();
  return {!seq.empty() && seq.back() == last.lhs_partial, os.str()};
}

}  // namespace

int main() {
  run(1, "equilateral Fisher zeros", 1, criterion1);
  run(2, "homogeneous factorization", 10, criterion2);
  run(3, "exact identity suite", 5000, criterion3);
  run(4, "geometric-zero sweep", 1000, criterion4);
  run(5, "pre-geometric sweep", 1000, criterion5);
  run(6, "volume identity", 1000, criterion6);
  run(7, "Racah vs 1/P_T^2", 30000, criterion7);
  run(8, "figurate suite", 5000, criterion8);
  run(9, "Pachner and scissor", 1000, criterion9);
  run(10, "Ponzano-Regge asymptotics", 10000, criterion10);
  run(11, "saddle residuals", 1000, criterion11);
  run(12, "figurate transform sequence", 5000, criterion12);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
