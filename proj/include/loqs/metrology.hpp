#ifndef LOQS_METROLOGY_HPP
#define LOQS_METROLOGY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "loqs/matrix.hpp"

namespace loqs::metro {

/// Per-mode phase weights f_j. Normalized strategies satisfy sum f = 1
/// with 0 <= f_j <= 1; the delta strategy (1,0,...,0) is the one case
/// allowed to touch the upper bound.
struct PhaseStrategy {
  std::vector<double> weights;

  PhaseStrategy normalized() const;

  static PhaseStrategy constant(int n);
  static PhaseStrategy sublinear(int n);   // f_j = sqrt(j)
  static PhaseStrategy linear(int n);      // f_j = j - 1 (the gradient strategy)
  static PhaseStrategy quadratic(int n);   // f_j = j^2
  static PhaseStrategy exponential(int n); // f_j = 2^j
  static PhaseStrategy delta(int n);       // f = (1, 0, ..., 0)
  static PhaseStrategy by_name(const std::string& name, int n);
};

struct SensitivityReport {
  int n = 0;
  double varphi = 0.0;
  double P = 0.0;
  double dP_dphi = 0.0;
  double delta_phi = 0.0;
  double snl = 0.0;
  double hl = 0.0;
  bool degenerate = false;  // |dP| below 1e-14: sensitivity undefined
};

struct ErrorPropagation {
  double delta_phi = 0.0;
  bool boundary = false;  // P in {0,1}: zero numerator, reported as 0
};

/// sqrt(P - P^2) / (sqrt(runs) * |dP|). Throws std::domain_error when
/// dP = 0 away from the boundary (divergent sensitivity).
ErrorPropagation error_propagation(double P, double dP, long runs);

/// (1/2)[[1-e^{i phi}, i(1+e^{i phi})], [i(1+e^{i phi}), -(1-e^{i phi})]]
UnitaryMatrix mzi_matrix(double phi);

/// Product form V * Phi * Theta * V' with V the n-mode QFT and linearly
/// increasing diagonal phases; defined for every phi. The canonical
/// constructor.
UnitaryMatrix mordor_unitary_product(int n, double phi, double theta = 0.0);

/// Closed-form entries (1 - e^{i n phi}) / (n (1 - w^{j-k} e^{i phi})),
/// diagonal-phase-equivalent to the derivation's e^{-2 i j k pi / n}
/// convention and with the identical permanent. Removably singular at
/// phi = 2 pi k / n; such points are rejected (use the product form).
UnitaryMatrix mordor_unitary_closed(int n, double phi);

/// Conjectured closed form (1/n^{n-1}) prod_{j=1}^{n-1} (j e^{i n phi} + n - j).
Complex mordor_permanent_analytic(int n, double phi);

/// (1/n^{2n-2}) prod_j [a_n(j) cos(n phi) + b_n(j)],
/// a_n(j) = 2j(n-j), b_n(j) = n^2 - 2jn + 2j^2.
double mordor_coincidence(int n, double phi);

/// n P |sin(n phi)| sum_j |a_n(j) / (a_n(j) cos(n phi) + b_n(j))|
double mordor_dP(int n, double phi);

/// Small-angle limit sqrt(3 / (2 n (n+1) (n-1))) = 1 / (2 sqrt(C(n+1,3))).
double mordor_delta_phi_small_angle(int n);

/// Single-phase interferometer: entries (1/n)(e^{i phi} + delta_jk * n - 1).
UnitaryMatrix qufti_unitary(int n, double phi);

/// Rencontres number D_{n,k}: permutations of n elements with exactly k
/// fixed points, exact integer arithmetic, n <= 30.
unsigned __int128 rencontres(int n, int k);

/// (1/n^n) sum_k D_{n,k} (e^{i phi} + n - 1)^k (e^{i phi} - 1)^{n-k}.
Complex qufti_permanent_analytic(int n, double phi);

/// Small-angle limit 1 / (2 sqrt(2) sqrt((n-1)/n)).
double qufti_delta_phi(int n);

/// Numeric sensitivity of the strategy U = V * Phi(f * phi) * V': P by
/// permanent, dP by central finite difference, runs = 1 baselines
/// snl = 1/sqrt(n), hl = 1/n.
SensitivityReport strategy_sensitivity(int n, const PhaseStrategy& strategy,
                                       double phi);

enum class BaselineModel { qufti_global, mordor_gradient, orc };

/// (snl, hl) under the selected resource-counting convention.
std::pair<double, double> snl_hl_baselines(int n, BaselineModel model);

/// Equivalent photon resource count behind each baseline convention.
double baseline_resources(int n, BaselineModel model);

/// Coincidence probability with per-mode Gaussian dephasing of mean
/// square chi_sq: cos(n phi) damped by e^{-n^2 chi_sq / 2}.
double dephased_coincidence(int n, double phi, double chi_sq);

/// (eta_source * eta_detector)^n
double efficiency(int n, double eta_source, double eta_detector);

struct OptimalitySearchReport {
  int n = 0;
  int trials = 0;
  double phi = 0.0;
  double qft_delta_phi = 0.0;
  double min_sampled = 0.0;   // NaN when trials = 0
  double mean_sampled = 0.0;  // NaN when trials = 0
};

/// Delta-strategy sensitivity of Haar-random interferometers W Phi_delta W'
/// against the QFT value. Reports statistics only; asserts nothing.
OptimalitySearchReport qft_optimality_search(int n, int trials,
                                             std::mt19937_64& rng, double phi);

}  // namespace loqs::metro

#endif
