#ifndef LOQS_VARIANTS_HPP
#define LOQS_VARIANTS_HPP

#include <utility>
#include <vector>

#include "loqs/matrix.hpp"

namespace loqs::variants {

/// Fock coefficients of |alpha> up to the cutoff:
/// c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!).
std::vector<Complex> coherent_coefficients(Complex alpha, int cutoff);

/// Fock coefficients of squeezed vacuum with xi = r e^{i theta}:
/// c_{2m} = (-1)^m sqrt((2m)!)/(2^m m!) e^{i m theta} tanh^m(r) / sqrt(cosh r),
/// odd coefficients exactly zero.
std::vector<Complex> squeezed_vacuum_coefficients(double r, double theta,
                                                  int cutoff);

/// Coherent displacement propagation beta_j = sum_i U_ij alpha_i;
/// preserves sum |alpha|^2.
std::vector<Complex> displace_through_network(const UnitaryMatrix& u,
                                              const std::vector<Complex>& alphas);

/// Probability of detecting i photons total with n photon-added coherent
/// inputs of equal |alpha|^2: C(n,i) (|alpha|^2)^{n-i} / (1+|alpha|^2)^n.
double pacs_postselection(long long n, double alpha_sq, long long i);

enum class PacsRegime { bs_hard, intermediate, classically_trivial };

/// bs_hard iff |alpha|^2 <= 1/n; classically_trivial iff |alpha|^2 >= n^2.
PacsRegime pacs_regime(long long n, double alpha_sq);

/// Wigner function of the single-photon-added coherent state:
/// W(z) = 2(|2z-alpha|^2 - 1) / (pi (1+|alpha|^2)) * e^{-2|z-alpha|^2}.
double spacs_wigner(Complex alpha, Complex z);

/// (1 + sinh^2 r)^{-n/2}
double passv_normalization(int n, double r);

enum class PassvKind { added, subtracted };

/// Parity sign vector (+1 even, -1 odd) with its probability.
using ParityDistribution = std::vector<std::pair<std::vector<int>, double>>;

/// Photon-added (or -subtracted) squeezed-vacuum sampling through a real
/// orthogonal network, marginalized onto per-mode parity. Numeric oracle
/// for the squeezing-independence of the sampling amplitudes; guards
/// modes <= 3, n <= 2, cutoff <= 20. Subtraction at r = 0 is rejected
/// (annihilating the vacuum).
ParityDistribution passv_parity_distribution(const UnitaryMatrix& o, int n,
                                             double r, double theta, int cutoff,
                                             PassvKind kind = PassvKind::added);

}  // namespace loqs::variants

#endif
