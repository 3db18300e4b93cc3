#include "loqs/netlib.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loqs::net {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0) x += kTwoPi;
  return x;
}

// Internal block parameterized by chi = tau - pi/2.
Matrix block_chi(double eta, double chi) {
  const double t = std::sqrt(eta);
  const double r = std::sqrt(1.0 - eta);
  const Complex i(0.0, 1.0);
  Matrix b(2, 2);
  b(0, 0) = t;
  b(0, 1) = i * r * std::exp(i * chi);
  b(1, 0) = i * r * std::exp(-i * chi);
  b(1, 1) = t;
  return b;
}

Matrix ginibre(int n, std::mt19937_64& rng, bool complex_entries) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = gauss(rng);
      double im = complex_entries ? gauss(rng) : 0.0;
      z(i, j) = Complex(re, im);
    }
  return z;
}

}  // namespace

Matrix beamsplitter_block(const BeamsplitterElement& e) {
  if (e.eta < 0.0 || e.eta > 1.0)
    throw std::invalid_argument("beamsplitter: eta outside [0,1]");
  return block_chi(e.eta, e.tau - kPi / 2.0);
}

UnitaryMatrix beamsplitter_unitary(const BeamsplitterElement& e, int n) {
  if (e.mode_p < 0 || e.mode_q < 0 || e.mode_p >= n || e.mode_q >= n)
    throw std::invalid_argument("beamsplitter: mode index out of range");
  if (e.mode_p == e.mode_q)
    throw std::invalid_argument("beamsplitter: modes must differ");
  Matrix b = beamsplitter_block(e);
  Matrix u = Matrix::Identity(n, n);
  const int p = e.mode_p, q = e.mode_q;
  u(p, p) = b(0, 0);
  u(p, q) = b(0, 1);
  u(q, p) = b(1, 0);
  u(q, q) = b(1, 1);
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix qft_matrix(int n) {
  if (n < 1) throw std::invalid_argument("qft_matrix: n must be >= 1");
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix v(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double ang = kTwoPi * static_cast<double>(j) * k / n;
      v(j, k) = s * Complex(std::cos(ang), std::sin(ang));
    }
  return UnitaryMatrix(std::move(v));
}

UnitaryMatrix haar_unitary(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
  Matrix z = ginibre(n, rng, true);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    Complex phase = (a > 0) ? d / a : Complex(1, 0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

UnitaryMatrix haar_orthogonal(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("haar_orthogonal: n must be >= 1");
  Matrix z = ginibre(n, rng, false);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j).real() < 0) q.col(j) *= -1.0;
  }
  // Householder on a real matrix keeps everything real; drop fp dust.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = Complex(q(i, j).real(), 0.0);
  return UnitaryMatrix(std::move(q));
}

UnitaryMatrix recompose(const ReckDecomposition& d) {
  const int n = d.dimension;
  if (n < 1) throw std::invalid_argument("recompose: empty decomposition");
  if (static_cast<int>(d.output_phases.size()) != n)
    throw std::invalid_argument("recompose: output phase count mismatch");
  Matrix m = Matrix::Identity(n, n);
  for (const auto& e : d.elements) {
    Matrix b = beamsplitter_block(e);
    if (e.mode_p < 0 || e.mode_q < 0 || e.mode_p >= n || e.mode_q >= n ||
        e.mode_p == e.mode_q)
      throw std::invalid_argument("recompose: bad element modes");
    // m <- m * T, T identity outside the (p,q) block
    const int p = e.mode_p, q = e.mode_q;
    Eigen::VectorXcd cp = m.col(p), cq = m.col(q);
    m.col(p) = cp * b(0, 0) + cq * b(1, 0);
    m.col(q) = cp * b(0, 1) + cq * b(1, 1);
  }
  const Complex i(0, 1);
  for (int j = 0; j < n; ++j) m.col(j) *= std::exp(i * d.output_phases[j]);
  return UnitaryMatrix(std::move(m));
}

ReckDecomposition reck_decompose(const UnitaryMatrix& u) {
  const int n = u.dim();
  Matrix w = u.mat();
  ReckDecomposition d;
  d.dimension = n;
  const Complex im(0, 1);
  constexpr double kZero = 1e-14;
  // Null the strict lower triangle with row rotations mixing adjacent
  // rows, bottom-up per column: T_k ... T_1 * U = D (diagonal), so
  // U = T_1' * ... * T_k' * D with ' the adjoint, itself a valid element.
  for (int col = 0; col < n - 1; ++col) {
    for (int row = n - 1; row > col; --row) {
      const Complex a = w(row - 1, col);
      const Complex b = w(row, col);
      if (std::abs(b) <= kZero) continue;  // already zero: emit nothing
      double eta;
      double chi;
      if (std::abs(a) <= kZero) {
        eta = 0.0;
        chi = 0.0;
      } else {
        const double aa = std::norm(a), bb = std::norm(b);
        eta = aa / (aa + bb);
        // require sqrt(eta)*b + i*sqrt(1-eta)*e^{-i chi}*a = 0
        chi = -(kPi / 2.0 + std::arg(b) - std::arg(a));
      }
      Matrix t = block_chi(eta, chi);
      // rows (row-1, row) <- t * rows
      Eigen::RowVectorXcd r0 = w.row(row - 1), r1 = w.row(row);
      w.row(row - 1) = t(0, 0) * r0 + t(0, 1) * r1;
      w.row(row) = t(1, 0) * r0 + t(1, 1) * r1;
      // adjoint of block_chi(eta, chi) is block_chi(eta, chi + pi)
      BeamsplitterElement e;
      e.mode_p = row - 1;
      e.mode_q = row;
      e.eta = eta;
      e.tau = wrap_2pi(chi + kPi + kPi / 2.0);
      d.elements.push_back(e);
    }
  }
  d.output_phases.resize(n);
  for (int j = 0; j < n; ++j) d.output_phases[j] = std::arg(w(j, j));
  return d;
}

UnitaryMatrix embed_su_in_so(const UnitaryMatrix& u) {
  const int m = u.dim();
  Matrix o = Matrix::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double re = u.mat()(i, j).real();
      const double imx = u.mat()(i, j).imag();
      o(i, j) = re;
      o(i, m + j) = -imx;
      o(m + i, j) = imx;
      o(m + i, m + j) = re;
    }
  return UnitaryMatrix(std::move(o));
}

UnitaryMatrix reck_random_unitary(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("reck_random_unitary: n must be >= 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ReckDecomposition d;
  d.dimension = n;
  for (int col = 0; col < n - 1; ++col) {
    for (int row = n - 1; row > col; --row) {
      BeamsplitterElement e;
      e.mode_p = row - 1;
      e.mode_q = row;
      e.eta = unit(rng);
      e.tau = kTwoPi * unit(rng);
      d.elements.push_back(e);
    }
  }
  d.output_phases.resize(n);
  for (int j = 0; j < n; ++j) d.output_phases[j] = kTwoPi * unit(rng);
  return recompose(d);
}

}  // namespace loqs::net
