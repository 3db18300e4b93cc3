#ifndef LOQS_FOCK_HPP
#define LOQS_FOCK_HPP

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "loqs/matrix.hpp"

namespace loqs::fock {

/// Photons per mode.
using Occupation = std::vector<int>;

int total_photons(const Occupation& occ);

/// Number of configurations of K photons in m modes: C(m+K-1, K).
/// Returns -1 on overflow past the guard.
long long configuration_count(int m, int K);

/// All occupation vectors of K photons in m modes, lexicographic order.
/// Guard: rejects instances with more than 10^7 configurations.
std::vector<Occupation> enumerate_configurations(int m, int K);

/// Normalized ket-basis transition amplitude
///   perm(U_{k,s}) / sqrt(prod k_i! * prod s_j!).
/// Small photon totals go through the repeated-row permanent; larger ones
/// through the creation-polynomial coefficient, which is the same quantity.
Complex amplitude(const UnitaryMatrix& u, const Occupation& input,
                  const Occupation& output);

/// Normalized probability map over all output configurations, keys in
/// lexicographic order.
struct FockDistribution {
  int mode_count = 0;
  int photon_total = 0;
  std::vector<std::pair<Occupation, double>> entries;
};

FockDistribution output_distribution(const UnitaryMatrix& u,
                                     const Occupation& input);

/// JSON: {"m":..., "n":..., "entries":[{"s":[...], "p":...}, ...]}.
std::string distribution_to_json(const FockDistribution& d);

/// Inverse-CDF sampling over the enumerated distribution; identical seed
/// gives an identical sequence.
std::vector<Occupation> sample(const FockDistribution& dist, int count,
                               std::mt19937_64& rng);

/// Expanded creation-operator polynomial: exponent vector -> coefficient.
using CreationPolynomial = std::map<std::vector<int>, Complex>;

/// Direct symbolic expansion of prod_i (sum_j U_ij a_j^dag)^{k_i} applied
/// to vacuum. The permanent-free oracle: the coefficient of exponent s,
/// times sqrt(prod s_j!) / sqrt(prod k_i!), is amplitude(u, input, s).
/// Guards: total photons <= 6, modes <= 8.
CreationPolynomial polynomial_oracle(const UnitaryMatrix& u,
                                     const Occupation& input);

/// Applies the per-photon-number-sector transition map to a truncated
/// superposition; sectors above the cutoff are dropped. Sector sizes
/// above 10^5 are rejected.
std::map<Occupation, Complex> truncated_evolution(
    const UnitaryMatrix& u, const std::map<Occupation, Complex>& state,
    int cutoff);

/// (1/2) sum |P(S) - Q(S)| over the union of supports.
double total_variation(const FockDistribution& p, const FockDistribution& q);

/// Advisory regime report for a BosonSampling instance; never blocks.
struct BsValidation {
  bool birthday_ok = false;   // m >= n^2
  bool hiding_ok = false;     // n <= m^(1/6), evaluated only when strict
  bool strict = false;
};

BsValidation validate_bs_instance(long long m, long long n, bool strict);

}  // namespace loqs::fock

#endif
