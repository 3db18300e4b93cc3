#include "loqs/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace loqs {

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

double unitarity_residual(const Matrix& m) {
  Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols())
    throw std::invalid_argument("UnitaryMatrix: matrix must be square and nonempty");
  if (!all_finite(mat_))
    throw std::invalid_argument("UnitaryMatrix: non-finite entries");
  double r = unitarity_residual(mat_);
  if (r > kUnitaryTol)
    throw std::invalid_argument("UnitaryMatrix: unitarity residual " +
                                std::to_string(r) + " exceeds tolerance");
}

std::string matrix_to_json(const Matrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      re.push_back(m(i, k).real());
      im.push_back(m(i, k).imag());
    }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const long rows = j.at("rows").get<long>();
  const long cols = j.at("cols").get<long>();
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("matrix_from_json: nonpositive dimensions");
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (static_cast<long>(re.size()) != rows * cols ||
      static_cast<long>(im.size()) != rows * cols)
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long k = 0; k < cols; ++k)
      m(i, k) = Complex(re[i * cols + k], im[i * cols + k]);
  if (!all_finite(m))
    throw std::invalid_argument("matrix_from_json: non-finite entries");
  return m;
}

}  // namespace loqs
