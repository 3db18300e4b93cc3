#ifndef LOQS_MATRIX_HPP
#define LOQS_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace loqs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tolerance on max|U'U - I| accepted at UnitaryMatrix construction.
inline constexpr double kUnitaryTol = 1e-10;

bool all_finite(const Matrix& m);

/// max-norm of (U'U - I); the residual checked at construction.
double unitarity_residual(const Matrix& m);

/// Square complex matrix verified near-unitary on construction.
/// Immutable; throws std::invalid_argument on a residual above kUnitaryTol.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m);
  const Matrix& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  Matrix mat_;
};

/// JSON serialization: {"rows": n, "cols": n, "re": [...], "im": [...]},
/// row-major. Shared by the CLI and test fixtures.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

}  // namespace loqs

#endif
