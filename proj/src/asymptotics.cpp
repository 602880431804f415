#include "tetraising/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>

namespace tetraising {

namespace {

std::array<double, 6> real_lengths(const TetraLengths& t) {
  std::array<double, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = t.l[i].real();
  return out;
}

double wrap_phase(double x) {
  x = std::remainder(x, 2.0 * std::numbers::pi);
  return x <= -std::numbers::pi ? x + 2.0 * std::numbers::pi : x;
}

}  // namespace

ReggeData regge_data(const TetraSpins& s, double shift) {
  const TetraLengths t = TetraLengths::from_spins(s, shift);
  const TetraAngles angles = tetra_angles(t);
  ReggeData out{s, real_lengths(t), angles.theta, std::sqrt(angles.volume_sq), 0.0};
  for (std::size_t e = 0; e < 6; ++e) out.action += out.lengths[e] * out.theta[e];
  return out;
}

double schlafli_defect(const std::array<double, 6>& lengths, const std::array<double, 6>& delta) {
  std::array<double, 6> moved{};
  for (std::size_t e = 0; e < 6; ++e) moved[e] = lengths[e] + delta[e];
  const auto before = tetra_angles(TetraLengths::real(lengths)).theta;
  const auto after = tetra_angles(TetraLengths::real(moved)).theta;
  double sum = 0.0;
  for (std::size_t e = 0; e < 6; ++e) sum += lengths[e] * (after[e] - before[e]);
  return sum;
}

double pr_envelope(const TetraSpins& s, double shift) {
  const ReggeData r = regge_data(s, shift);
  return 1.0 / std::sqrt(12.0 * std::numbers::pi * r.volume);
}

double pr_estimate(const TetraSpins& s, double shift) {
  const ReggeData r = regge_data(s, shift);
  return std::cos(r.action + 0.25 * std::numbers::pi) / std::sqrt(12.0 * std::numbers::pi * r.volume);
}

std::vector<AsymptoticSample> asymptotic_sweep(const TetraSpins& base, int min_scale,
                                               int max_scale, double shift) {
  if (min_scale < 1 || max_scale < min_scale) throw InvalidArgument("bad sweep range");
  std::vector<AsymptoticSample> out;
  const auto b = base.twice_values();
  for (int k = min_scale; k <= max_scale; ++k) {
    std::array<int, 6> t{};
    for (std::size_t e = 0; e < 6; ++e) t[e] = k * b[e];
    const TetraSpins s(t);
    if (!is_admissible(s)) continue;
    AsymptoticSample sample{k, s, sixj(s), pr_estimate(s, shift), pr_envelope(s, shift), 0.0, 0.0};
    sample.abs_err = std::abs(sample.estimate - sample.exact);
    sample.rel_envelope_err = sample.abs_err / sample.envelope;
    out.push_back(sample);
  }
  return out;
}

double relative_rms_error(const std::vector<AsymptoticSample>& samples) {
  double num = 0.0, den = 0.0;
  for (const auto& s : samples) {
    num += (s.estimate - s.exact) * (s.estimate - s.exact);
    den += s.envelope * s.envelope;
  }
  if (den == 0.0) throw InvalidArgument("empty sweep");
  return std::sqrt(num / den);
}

Couplings saddle_couplings(const TetraSpins& s, int eps) {
  return geometric_zeros(TetraLengths::from_spins(s, 0.0), eps).y;
}

std::array<SaddleResidual, 6> saddle_residual(const TetraSpins& s, const Couplings& y, int eps,
                                              SaddleModel model) {
  if (eps != 1 && eps != -1) throw InvalidArgument("eps must be +1 or -1");
  y.require_matches(builtin_graph(BuiltinGraph::Tetra));
  // twice-valued spin sums keep everything integral: J_v - 2 j_e = (T_v - 2 t_e) / 2
  const auto t = s.twice_values();
  auto tw = [&](int e) { return t[static_cast<std::size_t>(e - 1)]; };
  for (const auto& v : kTetraVertexTriads) {
    const int total = tw(v[0]) + tw(v[1]) + tw(v[2]);
    for (int e : v)
      if (total - 2 * tw(e) <= 0) throw DomainError("boundary spins: some J_v - 2 j_e vanishes");
  }

  const ReggeData regge = regge_data(s);
  std::array<SaddleResidual, 6> out{};
  for (int e = 1; e <= 6; ++e) {
    double real_part = 4.0 * std::log(std::abs(y.at(e)));
    for (const auto& v : kTetraVertexTriads) {
      if (std::find(v.begin(), v.end(), e) == v.end()) continue;
      const double J = 0.5 * (tw(v[0]) + tw(v[1]) + tw(v[2]));
      std::array<double, 2> other{};
      int k = 0;
      for (int x : v)
        if (x != e) other[static_cast<std::size_t>(k++)] = J - tw(x);
      const double own = J - tw(e);
      if (model == SaddleModel::Leading) {
        real_part += std::log(J * own / (other[0] * other[1]));
      } else {
        using boost::math::digamma;
        real_part += digamma(J + 2.0) + digamma(own + 1.0) - digamma(other[0] + 1.0) -
                     digamma(other[1] + 1.0);
      }
    }
    const double theta = regge.theta[static_cast<std::size_t>(e - 1)];
    out[static_cast<std::size_t>(e - 1)] = {real_part,
                                            wrap_phase(std::arg(y.at(e)) + 0.5 * eps * theta)};
  }
  return out;
}

double figurate_asymptote(int p, int q) {
  if (p < 1 || q < 1) throw InvalidArgument("figurate numbers need p, q >= 1");
  return q * std::log(2.0 * p / q);
}

}  // namespace tetraising
