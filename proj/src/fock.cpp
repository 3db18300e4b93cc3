#include "loqs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "loqs/permanent.hpp"

namespace loqs::fock {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double norm_factor(const Occupation& occ) {
  double f = 1.0;
  for (int c : occ) f *= factorial(c);
  return std::sqrt(f);
}

void check_occupation(const Occupation& occ, int dim, const char* who) {
  if (static_cast<int>(occ.size()) != dim)
    throw std::invalid_argument(std::string(who) + ": occupation length mismatch");
  for (int c : occ)
    if (c < 0)
      throw std::invalid_argument(std::string(who) + ": negative photon count");
}

// Expand prod_i (sum_j u_ij x_j)^{k_i}. When bound is non-null, exponent
// vectors exceeding it componentwise are pruned as they arise.
CreationPolynomial expand_creation(const Matrix& u, const Occupation& input,
                                   const Occupation* bound) {
  const int m = static_cast<int>(u.cols());
  CreationPolynomial poly;
  poly[std::vector<int>(m, 0)] = Complex(1, 0);
  for (int i = 0; i < static_cast<int>(input.size()); ++i) {
    for (int rep = 0; rep < input[i]; ++rep) {
      CreationPolynomial next;
      for (const auto& [exp, coeff] : poly) {
        for (int j = 0; j < m; ++j) {
          const Complex uij = u(i, j);
          if (uij == Complex(0, 0)) continue;
          if (bound && exp[j] + 1 > (*bound)[j]) continue;
          std::vector<int> e = exp;
          ++e[j];
          next[e] += coeff * uij;
        }
      }
      poly.swap(next);
    }
  }
  return poly;
}

}  // namespace

int total_photons(const Occupation& occ) {
  int t = 0;
  for (int c : occ) t += c;
  return t;
}

long long configuration_count(int m, int K) {
  // C(m+K-1, K) with overflow reported as -1
  long long r = 1;
  for (int i = 1; i <= K; ++i) {
    const long long num = m - 1 + i;
    if (r > (4e18) / num) return -1;
    r = r * num / i;
  }
  return r;
}

std::vector<Occupation> enumerate_configurations(int m, int K) {
  if (m < 1) throw std::invalid_argument("enumerate_configurations: m < 1");
  if (K < 0) throw std::invalid_argument("enumerate_configurations: K < 0");
  const long long count = configuration_count(m, K);
  if (count < 0 || count > 10'000'000)
    throw std::invalid_argument(
        "enumerate_configurations: instance exceeds 1e7 configurations");
  std::vector<Occupation> out;
  out.reserve(static_cast<size_t>(count));
  Occupation cur(m, 0);
  // lexicographic recursion, first mode slowest
  auto rec = [&](auto&& self, int mode, int left) -> void {
    if (mode == m - 1) {
      cur[mode] = left;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[mode] = c;
      self(self, mode + 1, left - c);
    }
  };
  rec(rec, 0, K);
  return out;
}

Complex amplitude(const UnitaryMatrix& u, const Occupation& input,
                  const Occupation& output) {
  const int n = u.dim();
  check_occupation(input, n, "amplitude");
  check_occupation(output, n, "amplitude");
  const int K = total_photons(input);
  if (K != total_photons(output))
    throw std::invalid_argument("amplitude: photon totals differ");
  if (K == 0) return Complex(1, 0);
  if (K <= 12) {
    perm::RepeatedRowSpec spec{input, output};
    Matrix rep = perm::build_repeated_matrix(u.mat(), spec);
    return perm::permanent_fast(rep) / (norm_factor(input) * norm_factor(output));
  }
  // Same amplitude through the creation-polynomial coefficient; the
  // repeated-row permanent at this size would be needlessly exponential.
  CreationPolynomial poly = expand_creation(u.mat(), input, &output);
  auto it = poly.find(output);
  const Complex coeff = (it == poly.end()) ? Complex(0, 0) : it->second;
  return coeff * norm_factor(output) / norm_factor(input);
}

FockDistribution output_distribution(const UnitaryMatrix& u,
                                     const Occupation& input) {
  const int m = u.dim();
  check_occupation(input, m, "output_distribution");
  const int K = total_photons(input);
  FockDistribution dist;
  dist.mode_count = m;
  dist.photon_total = K;
  for (const auto& s : enumerate_configurations(m, K)) {
    const Complex a = amplitude(u, input, s);
    dist.entries.emplace_back(s, std::norm(a));
  }
  return dist;
}

std::string distribution_to_json(const FockDistribution& d) {
  nlohmann::json j;
  j["m"] = d.mode_count;
  j["n"] = d.photon_total;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [s, p] : d.entries) {
    entries.push_back({{"s", s}, {"p", p}});
  }
  j["entries"] = entries;
  return j.dump();
}

std::vector<Occupation> sample(const FockDistribution& dist, int count,
                               std::mt19937_64& rng) {
  if (dist.entries.empty())
    throw std::invalid_argument("sample: empty distribution");
  std::vector<double> cdf;
  cdf.reserve(dist.entries.size());
  double acc = 0.0;
  for (const auto& [s, p] : dist.entries) {
    acc += p;
    cdf.push_back(acc);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Occupation> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double x = unit(rng) * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), x);
    const size_t idx = std::min<size_t>(it - cdf.begin(), cdf.size() - 1);
    out.push_back(dist.entries[idx].first);
  }
  return out;
}

CreationPolynomial polynomial_oracle(const UnitaryMatrix& u,
                                     const Occupation& input) {
  const int m = u.dim();
  check_occupation(input, m, "polynomial_oracle");
  if (total_photons(input) > 6 || m > 8)
    throw std::invalid_argument(
        "polynomial_oracle: guard exceeded (photons <= 6, modes <= 8)");
  CreationPolynomial poly = expand_creation(u.mat(), input, nullptr);
  for (auto it = poly.begin(); it != poly.end();) {
    if (std::abs(it->second) < 1e-15)
      it = poly.erase(it);
    else
      ++it;
  }
  return poly;
}

std::map<Occupation, Complex> truncated_evolution(
    const UnitaryMatrix& u, const std::map<Occupation, Complex>& state,
    int cutoff) {
  const int m = u.dim();
  std::map<int, std::map<Occupation, Complex>> sectors;
  for (const auto& [occ, c] : state) {
    check_occupation(occ, m, "truncated_evolution");
    const int K = total_photons(occ);
    if (K > cutoff)
      throw std::invalid_argument("truncated_evolution: key above cutoff");
    sectors[K][occ] = c;
  }
  std::map<Occupation, Complex> out;
  for (const auto& [K, sector] : sectors) {
    const long long size = configuration_count(m, K);
    if (size < 0 || size > 100'000)
      throw std::invalid_argument("truncated_evolution: sector size exceeds 1e5");
    for (const auto& [occ, c] : sector) {
      // one expansion yields the whole row of the sector transition matrix
      CreationPolynomial poly = expand_creation(u.mat(), occ, nullptr);
      const double kn = norm_factor(occ);
      for (const auto& [s, coeff] : poly) {
        out[s] += c * coeff * norm_factor(s) / kn;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (std::abs(it->second) < 1e-15)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

double total_variation(const FockDistribution& p, const FockDistribution& q) {
  if (p.mode_count != q.mode_count || p.photon_total != q.photon_total)
    throw std::invalid_argument("total_variation: shape mismatch");
  double acc = 0.0;
  size_t i = 0, j = 0;
  while (i < p.entries.size() || j < q.entries.size()) {
    if (i < p.entries.size() &&
        (j >= q.entries.size() || p.entries[i].first < q.entries[j].first)) {
      acc += std::abs(p.entries[i].second);
      ++i;
    } else if (j < q.entries.size() &&
               (i >= p.entries.size() ||
                q.entries[j].first < p.entries[i].first)) {
      acc += std::abs(q.entries[j].second);
      ++j;
    } else {
      acc += std::abs(p.entries[i].second - q.entries[j].second);
      ++i;
      ++j;
    }
  }
  return 0.5 * acc;
}

BsValidation validate_bs_instance(long long m, long long n, bool strict) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("validate_bs_instance: m, n must be >= 1");
  BsValidation v;
  v.strict = strict;
  v.birthday_ok = (static_cast<__int128>(n) * n <= m);
  if (strict) {
    __int128 n6 = 1;
    for (int i = 0; i < 6; ++i) n6 *= n;
    v.hiding_ok = (n6 <= m);
  }
  return v;
}

}  // namespace loqs::fock
