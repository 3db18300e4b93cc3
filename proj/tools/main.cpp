#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loqs/fock.hpp"
#include "loqs/matrix.hpp"
#include "loqs/metrology.hpp"
#include "loqs/netlib.hpp"
#include "loqs/permanent.hpp"
#include "loqs/variants.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using loqs::Complex;
using loqs::Matrix;
using loqs::UnitaryMatrix;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

UnitaryMatrix load_matrix(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto arg_d = [&](size_t i) { return std::stod(parts.at(i)); };
  auto arg_i = [&](size_t i) { return std::stoi(parts.at(i)); };
  auto arg_u = [&](size_t i) { return std::stoull(parts.at(i)); };
  if (name == "identity") {
    const int n = parts.size() > 1 ? arg_i(1) : 2;
    return UnitaryMatrix(Matrix::Identity(n, n));
  }
  if (name == "bs5050") {
    loqs::net::BeamsplitterElement e{0, 1, 0.5, M_PI / 2};
    return loqs::net::beamsplitter_unitary(e, 2);
  }
  if (name == "mzi") return loqs::metro::mzi_matrix(arg_d(1));
  if (name == "qft") return loqs::net::qft_matrix(arg_i(1));
  if (name == "mordor")
    return loqs::metro::mordor_unitary_product(arg_i(1), arg_d(2));
  if (name == "qufti") return loqs::metro::qufti_unitary(arg_i(1), arg_d(2));
  if (name == "haar") {
    std::mt19937_64 rng(arg_u(2));
    return loqs::net::haar_unitary(arg_i(1), rng);
  }
  if (name == "orth") {
    std::mt19937_64 rng(arg_u(2));
    return loqs::net::haar_orthogonal(arg_i(1), rng);
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return UnitaryMatrix(loqs::matrix_from_json(buf.str()));
}

struct Meta {
  std::string subcommand;
  std::string parameters;
  unsigned long long seed = 0;
  bool has_seed = false;
};

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << payload;
  }
}

std::string csv_header(const Meta& m) {
  std::string h;
  h += "# tool_version=" + std::string(kVersion) + "\n";
  h += "# subcommand=" + m.subcommand + "\n";
  h += "# parameters=" + m.parameters + "\n";
  if (m.has_seed) h += "# seed=" + std::to_string(m.seed) + "\n";
  h += "# timestamp=" + timestamp_now() + "\n";
  return h;
}

nlohmann::json json_meta(const Meta& m) {
  nlohmann::json j;
  j["tool_version"] = kVersion;
  j["subcommand"] = m.subcommand;
  j["parameters"] = m.parameters;
  if (m.has_seed) j["seed"] = m.seed;
  j["timestamp"] = timestamp_now();
  return j;
}

loqs::fock::Occupation parse_occupation(const std::string& s) {
  loqs::fock::Occupation occ;
  for (const auto& tok : split(s, ',')) occ.push_back(std::stoi(tok));
  return occ;
}

std::string occupation_csv(const loqs::fock::Occupation& occ) {
  std::string line;
  for (size_t i = 0; i < occ.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(occ[i]);
  }
  return line;
}

int run_sample(const std::string& matrix_spec, const std::string& input_str,
               int count, unsigned long long seed, const std::string& out,
               const std::string& format, bool strict) {
  UnitaryMatrix u = load_matrix(matrix_spec);
  const auto input = parse_occupation(input_str);
  const auto validation = loqs::fock::validate_bs_instance(
      u.dim(), std::max(1, loqs::fock::total_photons(input)), strict);
  if (strict && !validation.hiding_ok)
    throw std::invalid_argument("sample: strict hiding-theorem check failed");
  const auto dist = loqs::fock::output_distribution(u, input);
  std::mt19937_64 rng(seed);
  const auto draws = loqs::fock::sample(dist, count, rng);
  Meta meta{"sample",
            "matrix=" + matrix_spec + ";input=" + input_str +
                ";count=" + std::to_string(count),
            seed, true};
  std::string payload;
  if (format == "json") {
    nlohmann::json j;
    j["meta"] = json_meta(meta);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : draws) arr.push_back(d);
    j["samples"] = arr;
    payload = j.dump(2) + "\n";
  } else {
    payload = csv_header(meta);
    for (const auto& d : draws) payload += occupation_csv(d) + "\n";
  }
  write_output(out, payload);
  return 0;
}

int run_distribution(const std::string& matrix_spec, const std::string& input_str,
                     const std::string& out, const std::string& format,
                     bool strict) {
  UnitaryMatrix u = load_matrix(matrix_spec);
  const auto input = parse_occupation(input_str);
  loqs::fock::validate_bs_instance(
      u.dim(), std::max(1, loqs::fock::total_photons(input)), strict);
  const auto dist = loqs::fock::output_distribution(u, input);
  Meta meta{"distribution", "matrix=" + matrix_spec + ";input=" + input_str, 0,
            false};
  std::string payload;
  if (format == "json") {
    nlohmann::json j;
    j["meta"] = json_meta(meta);
    j["distribution"] = nlohmann::json::parse(loqs::fock::distribution_to_json(dist));
    payload = j.dump(2) + "\n";
  } else {
    payload = csv_header(meta);
    for (const auto& [s, p] : dist.entries)
      payload += occupation_csv(s) + "," + fmt17(p) + "\n";
  }
  write_output(out, payload);
  return 0;
}

int run_sensitivity(const std::string& family, int nmin, int nmax, double phi,
                    bool baselines, const std::string& out,
                    const std::string& format) {
  Meta meta{"sensitivity",
            "family=" + family + ";nmin=" + std::to_string(nmin) +
                ";nmax=" + std::to_string(nmax) + ";phi=" + fmt17(phi),
            0, false};
  nlohmann::json rows = nlohmann::json::array();
  for (int n = nmin; n <= nmax; ++n) {
    nlohmann::json row;
    row["n"] = n;
    row["phi"] = phi;
    if (family == "mordor") {
      const double P = loqs::metro::mordor_coincidence(n, phi);
      const double dP = loqs::metro::mordor_dP(n, phi);
      const auto ep = loqs::metro::error_propagation(P, dP, 1);
      row["P"] = P;
      row["dP"] = dP;
      row["delta_phi"] = ep.delta_phi;
      row["delta_phi_analytic"] = loqs::metro::mordor_delta_phi_small_angle(n);
    } else if (family == "qufti") {
      const auto rep = loqs::metro::strategy_sensitivity(
          n, loqs::metro::PhaseStrategy::delta(n), phi);
      row["P"] = rep.P;
      row["dP"] = rep.dP_dphi;
      row["delta_phi"] = rep.delta_phi;
      row["delta_phi_analytic"] = loqs::metro::qufti_delta_phi(n);
      row["sub_shotnoise"] =
          loqs::metro::qufti_delta_phi(n) < 1.0 / std::sqrt(double(n));
    } else if (family.rfind("strategy:", 0) == 0) {
      const auto strat =
          loqs::metro::PhaseStrategy::by_name(family.substr(9), n);
      const auto rep = loqs::metro::strategy_sensitivity(n, strat, phi);
      row["P"] = rep.P;
      row["dP"] = rep.dP_dphi;
      row["delta_phi"] = rep.delta_phi;
      row["degenerate"] = rep.degenerate;
    } else {
      throw std::invalid_argument("sensitivity: unknown family " + family);
    }
    if (baselines) {
      row["snl"] = 1.0 / std::sqrt(double(n));
      row["hl"] = 1.0 / double(n);
    }
    rows.push_back(row);
  }
  std::string payload;
  if (format == "json") {
    nlohmann::json j;
    j["meta"] = json_meta(meta);
    j["rows"] = rows;
    payload = j.dump(2) + "\n";
  } else {
    payload = csv_header(meta);
    payload += "n,phi,P,dP,delta_phi,delta_phi_analytic,snl,hl,flag\n";
    for (const auto& row : rows) {
      payload += std::to_string(int(row["n"])) + "," + fmt17(row["phi"]);
      for (const char* key : {"P", "dP", "delta_phi", "delta_phi_analytic",
                              "snl", "hl"}) {
        payload += ",";
        if (row.contains(key)) payload += fmt17(double(row[key]));
      }
      std::string flag;
      if (row.contains("sub_shotnoise"))
        flag = row["sub_shotnoise"] ? "sub_shotnoise" : "above_shotnoise";
      if (row.contains("degenerate") && bool(row["degenerate"]))
        flag = "degenerate";
      payload += "," + flag + "\n";
    }
  }
  write_output(out, payload);
  return 0;
}

struct VerifyAccumulator {
  double max_residual = 0.0;
  std::string worst_case;
  bool failed = false;
  std::string failure;

  void record(const std::string& name, double residual, double tol) {
    if (residual > max_residual) {
      max_residual = residual;
      worst_case = name;
    }
    if (residual > tol && !failed) {
      failed = true;
      failure = name + " residual " + fmt17(residual) + " exceeds " + fmt17(tol);
    }
  }
};

void verify_permanents(VerifyAccumulator& acc, int cap) {
  std::mt19937_64 rng(20260823);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int n = 2; n <= std::min(cap, 7); ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      Matrix a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
      const Complex pd = loqs::perm::permanent_definitional(a);
      const Complex pl = loqs::perm::permanent_laplace(a);
      const Complex pf = loqs::perm::permanent_fast(a);
      const std::string name = "permanent n=" + std::to_string(n) +
                               " rep=" + std::to_string(rep);
      acc.record(name + " def-vs-fast", std::abs(pd - pf) / std::max(1.0, std::abs(pd)), 1e-10);
      acc.record(name + " laplace-vs-fast", std::abs(pl - pf) / std::max(1.0, std::abs(pl)), 1e-10);
    }
  }
}

void verify_mordor(VerifyAccumulator& acc, int cap) {
  for (int n = 2; n <= std::min(cap, 12); ++n) {
    for (int k = 1; k <= 10; ++k) {
      const double phi = 0.05 + 0.28 * k;
      const UnitaryMatrix u = loqs::metro::mordor_unitary_product(n, phi);
      const Complex num = loqs::perm::permanent_fast(u.mat());
      const Complex ana = loqs::metro::mordor_permanent_analytic(n, phi);
      acc.record("mordor n=" + std::to_string(n) + " phi=" + fmt17(phi),
                 std::abs(num - ana) / std::max(1.0, std::abs(ana)), 1e-9);
    }
  }
}

void verify_qufti(VerifyAccumulator& acc, int cap) {
  for (int n = 2; n <= std::min(cap, 12); ++n) {
    for (int k = 1; k <= 10; ++k) {
      const double phi = 0.05 + 0.28 * k;
      const UnitaryMatrix u = loqs::metro::qufti_unitary(n, phi);
      const Complex num = loqs::perm::permanent_fast(u.mat());
      const Complex ana = loqs::metro::qufti_permanent_analytic(n, phi);
      acc.record("qufti n=" + std::to_string(n) + " phi=" + fmt17(phi),
                 std::abs(num - ana) / std::max(1.0, std::abs(ana)), 1e-9);
    }
  }
}

void verify_passv(VerifyAccumulator& acc, int /*cap*/) {
  std::mt19937_64 rng(7);
  const UnitaryMatrix o = loqs::net::haar_orthogonal(2, rng);
  const auto base = loqs::variants::passv_parity_distribution(
      o, 1, 0.0, 0.0, 16, loqs::variants::PassvKind::added);
  for (double r : {0.2, 0.4}) {
    const auto d = loqs::variants::passv_parity_distribution(
        o, 1, r, 0.0, 16, loqs::variants::PassvKind::added);
    double worst = 0.0;
    for (size_t i = 0; i < base.size() && i < d.size(); ++i)
      worst = std::max(worst, std::abs(base[i].second - d[i].second));
    acc.record("passv r=" + fmt17(r), worst, 1e-6);
  }
}

void verify_pacs(VerifyAccumulator& acc, int cap) {
  for (int n = 1; n <= std::min(cap, 20); ++n) {
    double s = 0.0;
    for (int i = 0; i <= n; ++i)
      s += loqs::variants::pacs_postselection(n, 0.37, i);
    acc.record("pacs sum n=" + std::to_string(n), std::abs(s - 1.0), 1e-12);
  }
}

int run_verify(const std::string& suite, int cap, const std::string& matrix_spec,
               const std::string& out) {
  VerifyAccumulator acc;
  if (!matrix_spec.empty()) {
    try {
      UnitaryMatrix u = load_matrix(matrix_spec);
      acc.record("matrix " + matrix_spec, loqs::unitarity_residual(u.mat()),
                 1e-10);
    } catch (const std::invalid_argument& e) {
      acc.failed = true;
      acc.failure = "matrix " + matrix_spec + ": " + e.what();
    }
  }
  if (suite == "permanents") verify_permanents(acc, cap);
  else if (suite == "mordor") verify_mordor(acc, cap);
  else if (suite == "qufti") verify_qufti(acc, cap);
  else if (suite == "passv") verify_passv(acc, cap);
  else if (suite == "pacs") verify_pacs(acc, cap);
  else throw std::invalid_argument("verify: unknown suite " + suite);

  Meta meta{"verify", "suite=" + suite + ";cap=" + std::to_string(cap), 0,
            false};
  nlohmann::json j;
  j["meta"] = json_meta(meta);
  j["suite"] = suite;
  j["max_residual"] = acc.max_residual;
  j["worst_case"] = acc.worst_case;
  j["passed"] = !acc.failed;
  if (acc.failed) j["failure"] = acc.failure;
  write_output(out, j.dump(2) + "\n");
  return acc.failed ? 1 : 0;
}

int run_wigner(double are, double aim, double xmin, double xmax, double ymin,
               double ymax, int points, const std::string& out) {
  if (points < 2) throw std::invalid_argument("wigner: points < 2");
  const Complex alpha(are, aim);
  Meta meta{"wigner",
            "alpha=" + fmt17(are) + "+" + fmt17(aim) + "i;grid=" +
                std::to_string(points),
            0, false};
  std::string payload = csv_header(meta);
  payload += "x,y,W\n";
  for (int ix = 0; ix < points; ++ix) {
    const double x = xmin + (xmax - xmin) * ix / (points - 1);
    for (int iy = 0; iy < points; ++iy) {
      const double y = ymin + (ymax - ymin) * iy / (points - 1);
      const double w = loqs::variants::spacs_wigner(alpha, Complex(x, y));
      payload += fmt17(x) + "," + fmt17(y) + "," + fmt17(w) + "\n";
    }
  }
  write_output(out, payload);
  return 0;
}

int run_pacs(long long n, double amin, double amax, int points,
             const std::string& out) {
  if (points < 1) throw std::invalid_argument("pacs: points < 1");
  Meta meta{"pacs",
            "n=" + std::to_string(n) + ";alpha_sq=" + fmt17(amin) + ".." +
                fmt17(amax) + ";points=" + std::to_string(points),
            0, false};
  std::string payload = csv_header(meta);
  payload += "alpha_sq,P_0,P_n,regime\n";
  for (int k = 0; k < points; ++k) {
    const double a =
        points == 1 ? amin : amin + (amax - amin) * k / (points - 1);
    const double p0 = loqs::variants::pacs_postselection(n, a, 0);
    const double pn = loqs::variants::pacs_postselection(n, a, n);
    const auto regime = loqs::variants::pacs_regime(n, a);
    const char* name = regime == loqs::variants::PacsRegime::bs_hard
                           ? "bs_hard"
                           : regime == loqs::variants::PacsRegime::classically_trivial
                                 ? "classically_trivial"
                                 : "intermediate";
    payload += fmt17(a) + "," + fmt17(p0) + "," + fmt17(pn) + "," + name + "\n";
  }
  write_output(out, payload);
  return 0;
}

int run_baselines(int nmin, int nmax, const std::string& out) {
  Meta meta{"baselines",
            "nmin=" + std::to_string(nmin) + ";nmax=" + std::to_string(nmax), 0,
            false};
  std::string payload = csv_header(meta);
  payload += "n,model,N,snl,hl\n";
  for (int n = nmin; n <= nmax; ++n) {
    for (auto model : {loqs::metro::BaselineModel::qufti_global,
                       loqs::metro::BaselineModel::mordor_gradient,
                       loqs::metro::BaselineModel::orc}) {
      const char* name = model == loqs::metro::BaselineModel::qufti_global
                             ? "qufti_global"
                             : model == loqs::metro::BaselineModel::mordor_gradient
                                   ? "mordor_gradient"
                                   : "orc";
      const double N = loqs::metro::baseline_resources(n, model);
      const auto [snl, hl] = loqs::metro::snl_hl_baselines(n, model);
      payload += std::to_string(n) + "," + name + "," + fmt17(N) + "," +
                 fmt17(snl) + "," + fmt17(hl) + "\n";
    }
  }
  write_output(out, payload);
  return 0;
}

int run_reck(const std::string& matrix_spec, const std::string& out) {
  UnitaryMatrix u = load_matrix(matrix_spec);
  const auto dec = loqs::net::reck_decompose(u);
  const UnitaryMatrix back = loqs::net::recompose(dec);
  const double residual =
      (back.mat() - u.mat()).cwiseAbs().maxCoeff();
  Meta meta{"reck", "matrix=" + matrix_spec, 0, false};
  nlohmann::json j;
  j["meta"] = json_meta(meta);
  j["dimension"] = dec.dimension;
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& e : dec.elements)
    elems.push_back({{"p", e.mode_p},
                     {"q", e.mode_q},
                     {"eta", e.eta},
                     {"tau", e.tau}});
  j["elements"] = elems;
  j["output_phases"] = dec.output_phases;
  j["roundtrip_residual"] = residual;
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int run_embed(const std::string& matrix_spec, const std::string& out) {
  UnitaryMatrix u = load_matrix(matrix_spec);
  const UnitaryMatrix o = loqs::net::embed_su_in_so(u);
  Meta meta{"embed", "matrix=" + matrix_spec, 0, false};
  nlohmann::json j;
  j["meta"] = json_meta(meta);
  j["matrix"] = nlohmann::json::parse(loqs::matrix_to_json(o.mat()));
  j["orthogonality_residual"] = loqs::unitarity_residual(o.mat());
  write_output(out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loqs: linear-optical quantum network simulation toolkit"};
  app.require_subcommand(1);

  std::string out_path, format = "csv", matrix_spec, input_str = "1";
  unsigned long long seed = 0;
  int threads = 0;
  bool strict = false;
  app.add_option("--threads", threads, "worker threads (0 = hardware default)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* c_sample = app.add_subcommand("sample", "draw boson-sampling outcomes");
  int count = 100;
  c_sample->add_option("--matrix", matrix_spec)->required();
  c_sample->add_option("--input", input_str)->required();
  c_sample->add_option("--count", count);
  c_sample->add_option("--seed", seed)->required();
  c_sample->add_flag("--strict", strict, "enable hiding-theorem validation");
  add_common(c_sample);

  auto* c_dist = app.add_subcommand("distribution", "full output distribution");
  c_dist->add_option("--matrix", matrix_spec)->required();
  c_dist->add_option("--input", input_str)->required();
  c_dist->add_flag("--strict", strict);
  add_common(c_dist);

  auto* c_sens = app.add_subcommand("sensitivity", "phase-sensitivity sweep");
  std::string family = "mordor";
  int nmin = 2, nmax = 10;
  double phi = 1e-4;
  bool baselines_flag = false;
  c_sens->add_option("--family", family);
  c_sens->add_option("--nmin", nmin);
  c_sens->add_option("--nmax", nmax);
  c_sens->add_option("--phi", phi);
  c_sens->add_flag("--baselines", baselines_flag);
  add_common(c_sens);

  auto* c_verify = app.add_subcommand("verify", "cross-oracle invariant suites");
  std::string suite = "permanents";
  int cap = 12;
  c_verify->add_option("--suite", suite);
  c_verify->add_option("--cap", cap);
  c_verify->add_option("--matrix", matrix_spec, "optional fixture to validate");
  add_common(c_verify);

  auto* c_wigner = app.add_subcommand("wigner", "SPACS Wigner-function grid");
  double are = 0, aim = 0, xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  int points = 41;
  c_wigner->add_option("--alpha-re", are);
  c_wigner->add_option("--alpha-im", aim);
  c_wigner->add_option("--xmin", xmin);
  c_wigner->add_option("--xmax", xmax);
  c_wigner->add_option("--ymin", ymin);
  c_wigner->add_option("--ymax", ymax);
  c_wigner->add_option("--points", points);
  add_common(c_wigner);

  auto* c_pacs = app.add_subcommand("pacs", "PACS post-selection sweep");
  long long pacs_n = 100;
  double amin = 0.0, amax = 1.0;
  int apoints = 101;
  c_pacs->add_option("--n", pacs_n);
  c_pacs->add_option("--alpha-sq-min", amin);
  c_pacs->add_option("--alpha-sq-max", amax);
  c_pacs->add_option("--points", apoints);
  add_common(c_pacs);

  auto* c_base = app.add_subcommand("baselines", "resource-counting baselines");
  c_base->add_option("--nmin", nmin);
  c_base->add_option("--nmax", nmax);
  add_common(c_base);

  auto* c_reck = app.add_subcommand("reck", "beamsplitter-mesh decomposition");
  c_reck->add_option("--matrix", matrix_spec)->required();
  add_common(c_reck);

  auto* c_embed = app.add_subcommand("embed", "realification embedding");
  c_embed->add_option("--matrix", matrix_spec)->required();
  add_common(c_embed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_sample)
      return run_sample(matrix_spec, input_str, count, seed, out_path, format,
                        strict);
    if (*c_dist)
      return run_distribution(matrix_spec, input_str, out_path, format, strict);
    if (*c_sens)
      return run_sensitivity(family, nmin, nmax, phi, baselines_flag, out_path,
                             format);
    if (*c_verify) return run_verify(suite, cap, matrix_spec, out_path);
    if (*c_wigner)
      return run_wigner(are, aim, xmin, xmax, ymin, ymax, points, out_path);
    if (*c_pacs) return run_pacs(pacs_n, amin, amax, apoints, out_path);
    if (*c_base) return run_baselines(nmin, nmax, out_path);
    if (*c_reck) return run_reck(matrix_spec, out_path);
    if (*c_embed) return run_embed(matrix_spec, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
