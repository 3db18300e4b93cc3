#include "loqs/metrology.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "loqs/netlib.hpp"
#include "loqs/permanent.hpp"

namespace loqs::metro {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix diagonal_phases(const std::vector<double>& phases) {
  const int n = static_cast<int>(phases.size());
  Matrix d = Matrix::Zero(n, n);
  const Complex i(0, 1);
  for (int j = 0; j < n; ++j) d(j, j) = std::exp(i * phases[j]);
  return d;
}

double coincidence_of(const Matrix& u) {
  return std::norm(perm::permanent_fast(u));
}

// P(phi) for the strategy f through the QFT conjugation.
double strategy_P(int n, const std::vector<double>& f, double phi) {
  const Matrix v = net::qft_matrix(n).mat();
  std::vector<double> phases(n);
  for (int j = 0; j < n; ++j) phases[j] = f[j] * phi;
  Matrix u = v * diagonal_phases(phases) * v.adjoint();
  return coincidence_of(u);
}

}  // namespace

PhaseStrategy PhaseStrategy::normalized() const {
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("PhaseStrategy: negative weight");
    sum += w;
  }
  if (sum <= 0) throw std::invalid_argument("PhaseStrategy: zero weight sum");
  PhaseStrategy out;
  out.weights.reserve(weights.size());
  for (double w : weights) out.weights.push_back(w / sum);
  return out;
}

PhaseStrategy PhaseStrategy::constant(int n) {
  PhaseStrategy s;
  s.weights.assign(n, 1.0 / n);
  return s;
}

PhaseStrategy PhaseStrategy::sublinear(int n) {
  PhaseStrategy s;
  for (int j = 1; j <= n; ++j) s.weights.push_back(std::sqrt(double(j)));
  return s.normalized();
}

PhaseStrategy PhaseStrategy::linear(int n) {
  PhaseStrategy s;
  for (int j = 1; j <= n; ++j) s.weights.push_back(double(j - 1));
  return s.normalized();
}

PhaseStrategy PhaseStrategy::quadratic(int n) {
  PhaseStrategy s;
  for (int j = 1; j <= n; ++j) s.weights.push_back(double(j) * j);
  return s.normalized();
}

PhaseStrategy PhaseStrategy::exponential(int n) {
  PhaseStrategy s;
  for (int j = 1; j <= n; ++j) s.weights.push_back(std::pow(2.0, j));
  return s.normalized();
}

PhaseStrategy PhaseStrategy::delta(int n) {
  PhaseStrategy s;
  s.weights.assign(n, 0.0);
  s.weights[0] = 1.0;
  return s;
}

PhaseStrategy PhaseStrategy::by_name(const std::string& name, int n) {
  if (name == "constant") return constant(n);
  if (name == "sublinear") return sublinear(n);
  if (name == "linear") return linear(n);
  if (name == "quadratic") return quadratic(n);
  if (name == "exponential") return exponential(n);
  if (name == "delta") return delta(n);
  throw std::invalid_argument("unknown phase strategy: " + name);
}

ErrorPropagation error_propagation(double P, double dP, long runs) {
  if (P < 0.0 || P > 1.0)
    throw std::invalid_argument("error_propagation: P outside [0,1]");
  if (runs < 1) throw std::invalid_argument("error_propagation: runs < 1");
  ErrorPropagation out;
  if (P == 0.0 || P == 1.0) {
    out.boundary = true;
    out.delta_phi = 0.0;
    return out;
  }
  if (dP == 0.0)
    throw std::domain_error("error_propagation: dP = 0, sensitivity undefined");
  out.delta_phi = std::sqrt(P - P * P) / (std::sqrt(double(runs)) * std::abs(dP));
  return out;
}

UnitaryMatrix mzi_matrix(double phi) {
  const Complex i(0, 1);
  const Complex e = std::exp(i * phi);
  Matrix u(2, 2);
  u(0, 0) = 0.5 * (1.0 - e);
  u(0, 1) = 0.5 * i * (1.0 + e);
  u(1, 0) = 0.5 * i * (1.0 + e);
  u(1, 1) = -0.5 * (1.0 - e);
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix mordor_unitary_product(int n, double phi, double theta) {
  if (n < 1) throw std::invalid_argument("mordor_unitary_product: n < 1");
  const Matrix v = net::qft_matrix(n).mat();
  std::vector<double> phases(n);
  for (int j = 0; j < n; ++j) phases[j] = j * (phi + theta);
  Matrix u = v * diagonal_phases(phases) * v.adjoint();
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix mordor_unitary_closed(int n, double phi) {
  if (n < 2) throw std::invalid_argument("mordor_unitary_closed: n < 2");
  // reject phi within 1e-8 of any 2 pi k / n (0/0 singularities)
  const double step = kTwoPi / n;
  const double frac = phi / step;
  if (std::abs(frac - std::round(frac)) * step < 1e-8)
    throw std::domain_error(
        "mordor_unitary_closed: phi at a removable singularity; "
        "use the product form");
  const Complex i(0, 1);
  const Complex num = 1.0 - std::exp(i * (double(n) * phi));
  Matrix u(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Complex w = std::exp(i * (kTwoPi * double(j - k) / n));
      u(j, k) = num / (double(n) * (1.0 - w * std::exp(i * phi)));
    }
  return UnitaryMatrix(std::move(u));
}

Complex mordor_permanent_analytic(int n, double phi) {
  if (n < 2 || n > 30)
    throw std::invalid_argument("mordor_permanent_analytic: n outside [2,30]");
  const Complex i(0, 1);
  const Complex e = std::exp(i * (double(n) * phi));
  Complex prod(1, 0);
  for (int j = 1; j <= n - 1; ++j)
    prod *= (double(j) * e + double(n - j)) / double(n);
  return prod;
}

double mordor_coincidence(int n, double phi) {
  if (n < 2 || n > 30)
    throw std::invalid_argument("mordor_coincidence: n outside [2,30]");
  const double c = std::cos(n * phi);
  double prod = 1.0;
  for (int j = 1; j <= n - 1; ++j) {
    const double a = 2.0 * j * (n - j);
    const double b = double(n) * n - 2.0 * j * n + 2.0 * j * j;
    prod *= (a * c + b) / (double(n) * n);
  }
  return prod;
}

double mordor_dP(int n, double phi) {
  if (n < 2 || n > 30)
    throw std::invalid_argument("mordor_dP: n outside [2,30]");
  const double c = std::cos(n * phi);
  const double P = mordor_coincidence(n, phi);
  double sum = 0.0;
  for (int j = 1; j <= n - 1; ++j) {
    const double a = 2.0 * j * (n - j);
    const double b = double(n) * n - 2.0 * j * n + 2.0 * j * j;
    sum += std::abs(a / (a * c + b));
  }
  return n * P * std::abs(std::sin(n * phi)) * sum;
}

double mordor_delta_phi_small_angle(int n) {
  if (n < 2) throw std::invalid_argument("mordor_delta_phi_small_angle: n < 2");
  return std::sqrt(3.0 / (2.0 * n * (double(n) + 1.0) * (double(n) - 1.0)));
}

UnitaryMatrix qufti_unitary(int n, double phi) {
  if (n < 2) throw std::invalid_argument("qufti_unitary: n < 2");
  const Complex i(0, 1);
  const Complex e = std::exp(i * phi);
  Matrix u(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      u(j, k) = (e + ((j == k) ? double(n) : 0.0) - 1.0) / double(n);
  return UnitaryMatrix(std::move(u));
}

unsigned __int128 rencontres(int n, int k) {
  if (n < 0 || n > 30) throw std::invalid_argument("rencontres: n outside [0,30]");
  if (k < 0 || k > n) throw std::invalid_argument("rencontres: k outside [0,n]");
  // D_{n,k} = C(n,k) * D_{n-k} with D_m the derangement number,
  // D_m = m * D_{m-1} + (-1)^m, exact in 128-bit integers to n = 30.
  const int m = n - k;
  unsigned __int128 der = 1;  // D_0
  for (int j = 1; j <= m; ++j) {
    der = der * static_cast<unsigned __int128>(j);
    if (j % 2 == 0)
      der += 1;
    else
      der -= 1;
  }
  unsigned __int128 binom = 1;
  for (int j = 1; j <= k; ++j)
    binom = binom * static_cast<unsigned __int128>(n - k + j) /
            static_cast<unsigned __int128>(j);
  return binom * der;
}

Complex qufti_permanent_analytic(int n, double phi) {
  if (n < 2 || n > 30)
    throw std::invalid_argument("qufti_permanent_analytic: n outside [2,30]");
  const Complex i(0, 1);
  const Complex e = std::exp(i * phi);
  const Complex x = (e + double(n) - 1.0) / double(n);
  const Complex y = (e - 1.0) / double(n);
  Complex acc(0, 0);
  for (int k = 0; k <= n; ++k) {
    const double d = static_cast<double>(rencontres(n, k));
    acc += d * std::pow(x, k) * std::pow(y, n - k);
  }
  return acc;
}

double qufti_delta_phi(int n) {
  if (n < 2) throw std::invalid_argument("qufti_delta_phi: n < 2");
  return 1.0 / (2.0 * std::sqrt(2.0) * std::sqrt((double(n) - 1.0) / n));
}

SensitivityReport strategy_sensitivity(int n, const PhaseStrategy& strategy,
                                       double phi) {
  if (static_cast<int>(strategy.weights.size()) != n)
    throw std::invalid_argument("strategy_sensitivity: strategy length mismatch");
  SensitivityReport r;
  r.n = n;
  r.varphi = phi;
  r.P = strategy_P(n, strategy.weights, phi);
  const double h = 1e-6 * std::max(1.0, std::abs(phi));
  r.dP_dphi = (strategy_P(n, strategy.weights, phi + h) -
               strategy_P(n, strategy.weights, phi - h)) /
              (2.0 * h);
  r.snl = 1.0 / std::sqrt(double(n));
  r.hl = 1.0 / double(n);
  // A strategy is degenerate when the derivative vanishes outright or when
  // P sits on a boundary and the residual derivative is finite-difference
  // noise (the constant strategy: a pure global phase).
  const bool boundary =
      std::min(r.P, 1.0 - r.P) < 1e-12 && std::abs(r.dP_dphi) < 1e-6;
  if (std::abs(r.dP_dphi) < 1e-14 || boundary) {
    r.degenerate = true;
    r.delta_phi = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  const double p = std::clamp(r.P, 0.0, 1.0);
  r.delta_phi = std::sqrt(p - p * p) / std::abs(r.dP_dphi);
  return r;
}

double baseline_resources(int n, BaselineModel model) {
  switch (model) {
    case BaselineModel::qufti_global:
      return double(n);
    case BaselineModel::mordor_gradient:
      // sum of squared interrogation counts: n(n-1)(2n-1)/6
      return double(n) * (n - 1.0) * (2.0 * n - 1.0) / 6.0;
    case BaselineModel::orc:
      return 1.0 + double(n) * (n - 1.0) / 2.0;
  }
  throw std::invalid_argument("baseline_resources: bad model");
}

std::pair<double, double> snl_hl_baselines(int n, BaselineModel model) {
  if (n < 2) throw std::invalid_argument("snl_hl_baselines: n < 2");
  const double N = baseline_resources(n, model);
  return {1.0 / std::sqrt(N), 1.0 / N};
}

double dephased_coincidence(int n, double phi, double chi_sq) {
  if (chi_sq < 0) throw std::invalid_argument("dephased_coincidence: chi_sq < 0");
  if (n < 2 || n > 30)
    throw std::invalid_argument("dephased_coincidence: n outside [2,30]");
  const double damp = std::exp(-0.5 * double(n) * n * chi_sq);
  const double c = std::cos(n * phi) * damp;
  double prod = 1.0;
  for (int j = 1; j <= n - 1; ++j) {
    const double a = 2.0 * j * (n - j);
    const double b = double(n) * n - 2.0 * j * n + 2.0 * j * j;
    prod *= (a * c + b) / (double(n) * n);
  }
  return prod;
}

double efficiency(int n, double eta_source, double eta_detector) {
  if (eta_source < 0 || eta_source > 1 || eta_detector < 0 || eta_detector > 1)
    throw std::invalid_argument("efficiency: rates outside [0,1]");
  return std::pow(eta_source * eta_detector, n);
}

OptimalitySearchReport qft_optimality_search(int n, int trials,
                                             std::mt19937_64& rng, double phi) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("qft_optimality_search: n outside [2,6]");
  if (trials < 0 || trials > 10'000)
    throw std::invalid_argument("qft_optimality_search: trials outside [0,1e4]");
  const auto delta_phi_for = [&](const Matrix& w) {
    const double h = 1e-6 * std::max(1.0, std::abs(phi));
    const auto P_at = [&](double x) {
      std::vector<double> phases(n, 0.0);
      phases[0] = x;
      Matrix u = w * diagonal_phases(phases) * w.adjoint();
      return coincidence_of(u);
    };
    const double P = P_at(phi);
    const double dP = (P_at(phi + h) - P_at(phi - h)) / (2.0 * h);
    if (std::abs(dP) < 1e-300)
      return std::numeric_limits<double>::infinity();
    const double p = std::clamp(P, 0.0, 1.0);
    return std::sqrt(p - p * p) / std::abs(dP);
  };
  OptimalitySearchReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.phi = phi;
  rep.qft_delta_phi = delta_phi_for(net::qft_matrix(n).mat());
  if (trials == 0) {
    rep.min_sampled = std::numeric_limits<double>::quiet_NaN();
    rep.mean_sampled = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  double best = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    // per-trial generator split deterministically from the root stream
    std::mt19937_64 sub(rng());
    const Matrix w = net::haar_unitary(n, sub).mat();
    const double d = delta_phi_for(w);
    best = std::min(best, d);
    sum += d;
  }
  rep.min_sampled = best;
  rep.mean_sampled = sum / trials;
  return rep;
}

}  // namespace loqs::metro
