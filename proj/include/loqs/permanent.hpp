#ifndef LOQS_PERMANENT_HPP
#define LOQS_PERMANENT_HPP

#include <vector>

#include "loqs/matrix.hpp"

namespace loqs::perm {

/// Sum over all permutations; n <= 9 (n! guard). The reference oracle
/// for the faster algorithms.
Complex permanent_definitional(const Matrix& m);

/// Recursive expansion along the first row; n <= 11.
Complex permanent_laplace(const Matrix& m);

/// Ryser's inclusion-exclusion with Gray-code row-sum updates,
/// O(2^n * n); n <= 30. Single fixed summation order, so the result is
/// bit-stable run to run.
Complex permanent_fast(const Matrix& m);

/// Relative-error convention used throughout: |a-b| / max(1, |a|, |b|),
/// meaningful both near zero (Hong-Ou-Mandel) and near n! scale.
double rel_err(Complex a, Complex b);

/// Photons per input mode (k) and output mode (s); totals must agree.
struct RepeatedRowSpec {
  std::vector<int> input_occupation;
  std::vector<int> output_occupation;
};

/// K x K matrix with row i of u repeated k_i times and column j repeated
/// s_j times, ascending mode order. perm of this matrix carries the Fock
/// transition amplitude.
Matrix build_repeated_matrix(const Matrix& u, const RepeatedRowSpec& spec);

}  // namespace loqs::perm

#endif
