#ifndef LOQS_NETLIB_HPP
#define LOQS_NETLIB_HPP

#include <random>
#include <vector>

#include "loqs/matrix.hpp"

namespace loqs::net {

/// Two-mode passive element. The induced 2x2 block is
///   [ sqrt(eta)              i*sqrt(1-eta)*e^{i(tau-pi/2)} ]
///   [ i*sqrt(1-eta)*e^{-i(tau-pi/2)}   sqrt(eta)           ]
/// so that (eta=1/2, tau=pi/2) is the canonical 50:50 beamsplitter
/// (1/sqrt2)[[1,i],[i,1]].
struct BeamsplitterElement {
  int mode_p = 0;
  int mode_q = 1;
  double eta = 0.5;      // transmissivity in [0,1]
  double tau = 0.0;      // phase in [0,2pi)
};

Matrix beamsplitter_block(const BeamsplitterElement& e);
UnitaryMatrix beamsplitter_unitary(const BeamsplitterElement& e, int n);

/// n-mode QFT: entry (j,k) = w^{(j-1)(k-1)}/sqrt(n), w = e^{2*pi*i/n},
/// 1-based exponent convention. Note: some derivations use the conjugate
/// convention exp(-2*pi*i*j*k/n); all observables here are |perm|^2 and
/// invariant under conjugation, so one convention is fixed throughout.
UnitaryMatrix qft_matrix(int n);

/// Haar-random unitary via QR of a complex Ginibre matrix with the
/// diagonal phase of R fixed. Deterministic in the generator state.
UnitaryMatrix haar_unitary(int n, std::mt19937_64& rng);

/// Haar-random real orthogonal matrix (real Ginibre + QR + sign fix).
UnitaryMatrix haar_orthogonal(int n, std::mt19937_64& rng);

/// Random unitary from the triangular beamsplitter mesh with (eta, tau)
/// drawn uniformly per element plus uniform output phases. Implemented
/// separately from haar_unitary; no measure equality is asserted.
UnitaryMatrix reck_random_unitary(int n, std::mt19937_64& rng);

/// Triangular mesh factorization: u = E_1 * E_2 * ... * E_k * diag(e^{i phi_j})
/// with the elements in declared order. At most n(n-1)/2 elements;
/// already-zero entries produce no element.
struct ReckDecomposition {
  int dimension = 0;
  std::vector<BeamsplitterElement> elements;
  std::vector<double> output_phases;
};

ReckDecomposition reck_decompose(const UnitaryMatrix& u);
UnitaryMatrix recompose(const ReckDecomposition& d);

/// Realification U -> [[Re U, -Im U], [Im U, Re U]], an orthogonal 2m x 2m
/// matrix; product-preserving embedding of U(m) into SO(2m).
UnitaryMatrix embed_su_in_so(const UnitaryMatrix& u);

}  // namespace loqs::net

#endif
