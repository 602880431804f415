#pragma once

#include <array>
#include <vector>

#include "tetraising/geometry.hpp"
#include "tetraising/recoupling.hpp"

namespace tetraising {

struct ReggeData {
  TetraSpins spins;
  std::array<double, 6> lengths;  // j_e + shift
  std::array<double, 6> theta;    // external dihedral angles
  double volume;
  double action;                  // sum_e lengths_e theta_e
};

/// Regge geometry of the tetrahedron with edge lengths j_e + shift
/// (shift = 1/2 by default). Throws LorentzianRegime when V^2 < 0.
ReggeData regge_data(const TetraSpins& s, double shift = 0.5);

/// sum_e l_e (theta_e(l + delta) - theta_e(l)); second order in delta.
double schlafli_defect(const std::array<double, 6>& lengths, const std::array<double, 6>& delta);

/// cos(S_R + pi/4) / sqrt(12 pi V), with S_R and V at lengths j + shift.
double pr_estimate(const TetraSpins& s, double shift = 0.5);
/// 1 / sqrt(12 pi V) at lengths j + shift.
double pr_envelope(const TetraSpins& s, double shift = 0.5);

struct AsymptoticSample {
  int scale;  // spins are scale * base
  TetraSpins spins;
  double exact;
  double estimate;
  double envelope;
  double abs_err;
  double rel_envelope_err;  // abs_err / envelope
};

/// Exact 6j against the estimate along the ray scale * base, for every
/// scale in [min_scale, max_scale] with admissible spins.
std::vector<AsymptoticSample> asymptotic_sweep(const TetraSpins& base, int min_scale,
                                               int max_scale, double shift = 0.5);

/// sqrt(sum (estimate - exact)^2 / sum envelope^2).
double relative_rms_error(const std::vector<AsymptoticSample>& samples);

/// Geometric zero at lengths l_e = j_e. Convention: the phase of Y_e is
/// exp(+i eps theta_e / 2), so saddle_couplings(s, eps) is
/// geometric_zeros(l = j, eps).
Couplings saddle_couplings(const TetraSpins& s, int eps);

enum class SaddleModel {
  Leading,  // log of the printed Stirling derivative
  Exact,    // digamma derivative of the factorial weights
};

struct SaddleResidual {
  double real_part;  // d/dj_e Re(S) with the measure term
  double phase;      // arg(Y_e) + eps theta_e / 2, wrapped to (-pi, pi]
};

/// Stationarity residuals of the action for cosine branch eps, with Y_e =
/// |Y_e| exp(-i Theta_e): the phase condition is Theta_e = eps theta_e / 2,
/// so the matching couplings are saddle_couplings(s, -eps). The dihedral
/// angles come from regge_data (lengths j + 1/2), which makes the phase
/// residual an O(1/j) quantity.
std::array<SaddleResidual, 6> saddle_residual(const TetraSpins& s, const Couplings& y, int eps,
                                              SaddleModel model = SaddleModel::Leading);

/// q ln(2p/q), the leading log of T(p, q) for p >> q.
double figurate_asymptote(int p, int q);

}  // namespace tetraising
