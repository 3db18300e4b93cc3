#include "loqs/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace loqs::perm {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

Complex laplace_rec(const Matrix& m) {
  const long n = m.rows();
  if (n == 1) return m(0, 0);
  Complex acc(0, 0);
  for (long j = 0; j < n; ++j) {
    if (m(0, j) == Complex(0, 0)) continue;
    Matrix sub(n - 1, n - 1);
    for (long r = 1; r < n; ++r) {
      long cc = 0;
      for (long c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    acc += m(0, j) * laplace_rec(sub);
  }
  return acc;
}

}  // namespace

Complex permanent_definitional(const Matrix& m) {
  require_square(m, "permanent_definitional");
  const long n = m.rows();
  if (n == 0) return Complex(1, 0);
  if (n > 9)
    throw std::invalid_argument("permanent_definitional: n > 9");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex acc(0, 0);
  do {
    Complex prod(1, 0);
    for (long i = 0; i < n; ++i) prod *= m(i, sigma[i]);
    acc += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return acc;
}

Complex permanent_laplace(const Matrix& m) {
  require_square(m, "permanent_laplace");
  const long n = m.rows();
  if (n == 0) return Complex(1, 0);
  if (n > 11) throw std::invalid_argument("permanent_laplace: n > 11");
  return laplace_rec(m);
}

Complex permanent_fast(const Matrix& m) {
  require_square(m, "permanent_fast");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Complex(1, 0);
  if (n > 30) throw std::invalid_argument("permanent_fast: n > 30");
  // perm(M) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} m_ij
  std::vector<Complex> rowsum(n, Complex(0, 0));
  Complex total(0, 0);
  const std::uint64_t count = 1ull << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ next;
    const int j = std::countr_zero(diff);
    const double sgn = (next & diff) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) rowsum[i] += sgn * m(i, j);
    gray = next;
    Complex prod(1, 0);
    for (int i = 0; i < n; ++i) prod *= rowsum[i];
    if (std::popcount(next) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  if (n % 2 != 0) total = -total;
  return total;
}

double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

Matrix build_repeated_matrix(const Matrix& u, const RepeatedRowSpec& spec) {
  const long n = u.rows();
  if (u.cols() != n)
    throw std::invalid_argument("build_repeated_matrix: matrix must be square");
  const auto& k = spec.input_occupation;
  const auto& s = spec.output_occupation;
  if (static_cast<long>(k.size()) != n || static_cast<long>(s.size()) != n)
    throw std::invalid_argument("build_repeated_matrix: occupation length mismatch");
  long kt = 0, st = 0;
  for (int v : k) {
    if (v < 0) throw std::invalid_argument("build_repeated_matrix: negative count");
    kt += v;
  }
  for (int v : s) {
    if (v < 0) throw std::invalid_argument("build_repeated_matrix: negative count");
    st += v;
  }
  if (kt != st)
    throw std::invalid_argument("build_repeated_matrix: photon totals differ");
  Matrix out(kt, kt);
  long r = 0;
  for (long i = 0; i < n; ++i) {
    for (int a = 0; a < k[i]; ++a, ++r) {
      long c = 0;
      for (long j = 0; j < n; ++j)
        for (int b = 0; b < s[j]; ++b, ++c) out(r, c) = u(i, j);
    }
  }
  return out;
}

}  // namespace loqs::perm
