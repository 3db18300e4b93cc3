#include "loqs/variants.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "loqs/fock.hpp"

namespace loqs::variants {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Single-mode coefficient vector after applying a dagger (shift up) or a
// (shift down), unnormalized.
std::vector<Complex> apply_creation(const std::vector<Complex>& c) {
  std::vector<Complex> out(c.size(), Complex(0, 0));
  for (size_t k = 0; k + 1 < c.size(); ++k)
    out[k + 1] = std::sqrt(static_cast<double>(k + 1)) * c[k];
  return out;
}

std::vector<Complex> apply_annihilation(const std::vector<Complex>& c) {
  std::vector<Complex> out(c.size(), Complex(0, 0));
  for (size_t k = 1; k < c.size(); ++k)
    out[k - 1] = std::sqrt(static_cast<double>(k)) * c[k];
  return out;
}

void normalize(std::vector<Complex>& c) {
  double s = 0.0;
  for (const Complex& x : c) s += std::norm(x);
  if (s <= 0.0)
    throw std::invalid_argument(
        "passv_parity_distribution: annihilated state has zero norm "
        "(photon subtraction from vacuum)");
  const double inv = 1.0 / std::sqrt(s);
  for (Complex& x : c) x *= inv;
}

}  // namespace

std::vector<Complex> coherent_coefficients(Complex alpha, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("coherent_coefficients: cutoff < 0");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::invalid_argument("coherent_coefficients: non-finite alpha");
  std::vector<Complex> c(cutoff + 1);
  c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= cutoff; ++n)
    c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  return c;
}

std::vector<Complex> squeezed_vacuum_coefficients(double r, double theta,
                                                  int cutoff) {
  if (cutoff < 0)
    throw std::invalid_argument("squeezed_vacuum_coefficients: cutoff < 0");
  if (r < 0) throw std::invalid_argument("squeezed_vacuum_coefficients: r < 0");
  std::vector<Complex> c(cutoff + 1, Complex(0, 0));
  c[0] = 1.0 / std::sqrt(std::cosh(r));
  const Complex step = -0.5 * std::tanh(r) * std::exp(Complex(0, theta));
  for (int m = 1; 2 * m <= cutoff; ++m) {
    // ratio c_{2m}/c_{2m-2} = -e^{i theta} tanh(r) sqrt(2m-1)/sqrt(2m) ... /2
    c[2 * m] = c[2 * (m - 1)] * step *
               std::sqrt(static_cast<double>(2 * m) * (2 * m - 1)) /
               static_cast<double>(m);
  }
  return c;
}

std::vector<Complex> displace_through_network(const UnitaryMatrix& u,
                                              const std::vector<Complex>& alphas) {
  const int m = u.dim();
  if (static_cast<int>(alphas.size()) != m)
    throw std::invalid_argument("displace_through_network: length mismatch");
  std::vector<Complex> betas(m, Complex(0, 0));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) betas[j] += u.mat()(i, j) * alphas[i];
  return betas;
}

double pacs_postselection(long long n, double alpha_sq, long long i) {
  if (n < 1) throw std::invalid_argument("pacs_postselection: n < 1");
  if (i < 0 || i > n)
    throw std::invalid_argument("pacs_postselection: i out of range");
  if (alpha_sq < 0)
    throw std::invalid_argument("pacs_postselection: alpha_sq < 0");
  if (alpha_sq == 0.0) return (i == n) ? 1.0 : 0.0;
  // log-space for large n
  const double log_binom = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                           std::lgamma(n - i + 1.0);
  const double lp = log_binom + (n - i) * std::log(alpha_sq) -
                    n * std::log1p(alpha_sq);
  return std::exp(lp);
}

PacsRegime pacs_regime(long long n, double alpha_sq) {
  if (n < 1) throw std::invalid_argument("pacs_regime: n < 1");
  if (alpha_sq < 0) throw std::invalid_argument("pacs_regime: alpha_sq < 0");
  if (alpha_sq <= 1.0 / static_cast<double>(n)) return PacsRegime::bs_hard;
  if (alpha_sq >= static_cast<double>(n) * static_cast<double>(n))
    return PacsRegime::classically_trivial;
  return PacsRegime::intermediate;
}

double spacs_wigner(Complex alpha, Complex z) {
  const double a2 = std::norm(2.0 * z - alpha);
  const double d2 = std::norm(z - alpha);
  return 2.0 * (a2 - 1.0) / (kPi * (1.0 + std::norm(alpha))) *
         std::exp(-2.0 * d2);
}

double passv_normalization(int n, double r) {
  if (n < 0) throw std::invalid_argument("passv_normalization: n < 0");
  if (r < 0) throw std::invalid_argument("passv_normalization: r < 0");
  const double s = std::sinh(r);
  return std::pow(1.0 + s * s, -0.5 * n);
}

ParityDistribution passv_parity_distribution(const UnitaryMatrix& o, int n,
                                             double r, double theta, int cutoff,
                                             PassvKind kind) {
  const int m = o.dim();
  if (m > 3 || n > 2 || cutoff > 20 || n < 0 || cutoff < 0)
    throw std::invalid_argument(
        "passv_parity_distribution: oracle guard (modes <= 3, n <= 2, "
        "cutoff <= 20)");
  if (n > m)
    throw std::invalid_argument("passv_parity_distribution: n exceeds modes");
  if (r < 0) throw std::invalid_argument("passv_parity_distribution: r < 0");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (std::abs(o.mat()(i, j).imag()) > 1e-12)
        throw std::invalid_argument(
            "passv_parity_distribution: complex entries rejected, PASSV "
            "requires a real orthogonal network");

  // Per-mode coefficient vectors: photon-added (or -subtracted) squeezed
  // vacuum on the first n modes, plain squeezed vacuum on the rest.
  std::vector<std::vector<Complex>> modes(m);
  const std::vector<Complex> sv = squeezed_vacuum_coefficients(r, theta, cutoff);
  for (int i = 0; i < m; ++i) {
    if (i < n) {
      modes[i] = (kind == PassvKind::added) ? apply_creation(sv)
                                            : apply_annihilation(sv);
      normalize(modes[i]);
    } else {
      modes[i] = sv;
    }
  }

  // Tensor product into a truncated superposition, dropping totals past the
  // cutoff (the dropped weight is within the truncation tail).
  std::map<fock::Occupation, Complex> state;
  fock::Occupation occ(m, 0);
  auto build = [&](auto&& self, int mode, int total, Complex amp) -> void {
    if (std::abs(amp) < 1e-16) return;
    if (mode == m) {
      state[occ] += amp;
      return;
    }
    for (int k = 0; k + total <= cutoff &&
                    k < static_cast<int>(modes[mode].size());
         ++k) {
      occ[mode] = k;
      self(self, mode + 1, total + k, amp * modes[mode][k]);
    }
    occ[mode] = 0;
  };
  build(build, 0, 0, Complex(1, 0));

  std::map<fock::Occupation, Complex> evolved =
      fock::truncated_evolution(o, state, cutoff);

  std::map<std::vector<int>, double> parity;
  for (const auto& [s, amp] : evolved) {
    std::vector<int> signs(m);
    for (int i = 0; i < m; ++i) signs[i] = (s[i] % 2 == 0) ? 1 : -1;
    parity[signs] += std::norm(amp);
  }
  ParityDistribution out(parity.begin(), parity.end());
  return out;
}

}  // namespace loqs::variants
