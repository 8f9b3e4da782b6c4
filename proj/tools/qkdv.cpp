#include "qkdv/cache.hpp"
#include "qkdv/format.hpp"
#include "qkdv/functional.hpp"
#include "qkdv/kdv.hpp"
#include "qkdv/parser.hpp"
#include "qkdv/qbracket.hpp"
#include "qkdv/schurops.hpp"
#include "qkdv/validate.hpp"

#ifdef QKDV_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace qkdv;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kOutputSchemaVersion = 1;

// Usage problems detected after CLI11 has accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::unique_ptr<HamiltonianCache> open_cache(const std::string& flag) {
  std::string dir = flag;
  if (const char* env = std::getenv("QKDV_CACHE"); env != nullptr && *env != '\0') {
    dir = env;
  }
  if (dir.empty()) {
    return nullptr;
  }
  return std::make_unique<HamiltonianCache>(dir);
}

EtaMatrix read_eta(const std::string& path, int rank) {
  if (path.empty()) {
    return EtaMatrix::identity(rank);
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open eta file " + path);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("eta file is not valid JSON: " + std::string(e.what()));
  }
  // either a bare matrix or {"eta": matrix}
  const nlohmann::json& rows = doc.is_object() ? doc.at("eta") : doc;
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    auto& out = m.emplace_back();
    for (const auto& x : row) {
      out.push_back(rational_from_json(x));
    }
  }
  EtaMatrix eta(std::move(m));
  if (eta.rank() != rank) {
    throw UsageError("eta file has rank " + std::to_string(eta.rank()) + " but --rank is " + std::to_string(rank));
  }
  return eta;
}

// "s^2 (= hbar)", "3 * s^4 (= 3 * hbar^2)"; odd s-powers have no hbar form.
std::string eigen_text(const Coefficient& e) {
  if (e.terms().size() != 1 || e.terms()[0].first == 0) {
    return to_text(e);
  }
  const unsigned pw = e.terms()[0].first;
  const Rational& c = e.terms()[0].second;
  std::string out = pw == 1 ? "s" : "s^" + std::to_string(pw);
  if (c != 1) {
    out = to_string(c) + " * " + out;
  }
  if (pw % 2 != 0) {
    return out;
  }
  const unsigned k = pw / 2;
  std::string h = k == 1 ? "hbar" : "hbar^" + std::to_string(k);
  if (c != 1) {
    h = to_string(c) + " * " + h;
  }
  return out + " (= " + h + ")";
}

int run_hn(int n, const std::string& route, const std::string& format, const std::string& cache_dir, bool force) {
  const Route r = parse_route(route);
  auto cache = open_cache(cache_dir);
  HamiltonianRecord rec;
  try {
    rec = cached_hamiltonian(n, r, cache.get(), force);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    nlohmann::json out = {{"schema_version", kOutputSchemaVersion},
                          {"n", n},
                          {"route", route_name(r)},
                          {"density", to_json(rec.density)},
                          {"text", to_text(rec.density)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_text(rec.density) << "\n";
  }
  return kExitOk;
}

int run_bracket(const std::string& f, const std::string& g, bool classical, int rank, const std::string& eta_file,
                const std::string& format) {
  const EtaMatrix eta = read_eta(eta_file, rank);
  const LocalFunctional F(parse(f, rank));
  const LocalFunctional G(parse(g, rank));
  const LocalFunctional B = classical ? classical_poisson(F, G, eta) : quantum_bracket(F, G, eta);
  const bool zero = B.is_zero();
  if (format == "json") {
    nlohmann::json out = {{"schema_version", kOutputSchemaVersion},
                          {"kind", classical ? "classical" : "quantum"},
                          {"rank", rank},
                          {"representative", to_json(B.representative())},
                          {"text", to_text(B.representative())},
                          {"zero_functional", zero}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_text(B.representative()) << "\n";
    std::cout << "zero as functional: " << (zero ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_commute(int max) {
  bool all = true;
  for (int n = 0; 2 * n + 1 <= max; ++n) {
    for (int m = n + 1; n + m <= max; ++m) {
      const bool ok = commute_check(n, m);
      all = all && ok;
      std::cout << "[H_" << n << ", H_" << m << "] = 0: " << (ok ? "true" : "false") << "\n";
    }
  }
  return all ? kExitOk : kExitFailed;
}

int run_eigen(int n, const std::string& lambda_text, const std::string& format) {
  IntVector lambda;
  try {
    lambda = parse_partition(lambda_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (n < 0) {
    throw UsageError("--n must be non-negative");
  }
  const SpectrumResult res = spectrum(n, lambda);
  if (format == "json") {
    nlohmann::json out = {{"schema_version", kOutputSchemaVersion},
                          {"n", n},
                          {"lambda", lambda},
                          {"eigenvalue", to_text(res.eigenvalue)},
                          {"verified", res.verified}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << eigen_text(res.eigenvalue) << "; verified: " << (res.verified ? "true" : "false") << "\n";
  }
  return res.verified ? kExitOk : kExitFailed;
}

int run_trees(int n, bool show_states, bool force) {
  if (n < 1) {
    throw UsageError("--n must be at least 1");
  }
  if (n > kTreeRouteMaxN && !force) {
    throw UsageError("trees --n " + std::to_string(n) + " enumerates " + std::to_string(n - 1) +
                     "! trees; pass --force above " + std::to_string(kTreeRouteMaxN));
  }
  const auto trees = enumerate_trees(n);
  std::cout << "BT(" << n << "): " << trees.size() << " trees\n";
  for (const auto& t : trees) {
    std::cout << t.to_string();
    if (show_states) {
      std::cout << "  " << to_text(tree_state(t));
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_validate(const std::string& suite, std::uint64_t seed, int cases) {
  std::vector<SuiteReport> reports;
  try {
    reports = run_suites(suite, seed, cases);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : reports) {
    std::cout << format_report(r);
    all = all && r.ok();
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum dispersionless KdV: exact Hamiltonians, brackets and spectra"};
  app.require_subcommand(1);

  const std::vector<std::string> routes = {"trees", "rec", "weyl", "gk", "schur"};
  const std::vector<std::string> formats = {"text", "json"};

  int n = 0;
  std::string route = "weyl";
  std::string format = "text";
  std::string cache_dir;
  bool force = false;
  auto* hn = app.add_subcommand("hn", "print the Hamiltonian density h_n");
  hn->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
  hn->add_option("--route", route, "construction route")->check(CLI::IsMember(routes));
  hn->add_option("--format", format)->check(CLI::IsMember(formats));
  hn->add_option("--cache", cache_dir, "cache directory (QKDV_CACHE overrides)");
  hn->add_flag("--force", force, "allow the tree route above its size guard");

  std::string f_expr;
  std::string g_expr;
  bool classical = false;
  int rank = 1;
  std::string eta_file;
  auto* bracket = app.add_subcommand("bracket", "bracket of two local functionals");
  bracket->add_option("--f", f_expr)->required();
  bracket->add_option("--g", g_expr)->required();
  bracket->add_flag("--classical", classical, "classical Poisson bracket instead of the quantum one");
  bracket->add_option("--rank", rank)->check(CLI::PositiveNumber);
  bracket->add_option("--eta", eta_file, "JSON file holding the matrix eta")->check(CLI::ExistingFile);
  bracket->add_option("--format", format)->check(CLI::IsMember(formats));

  int max = 0;
  auto* commute = app.add_subcommand("commute", "check [H_n, H_m] = 0 for n < m, n + m <= max");
  commute->add_option("--max", max)->required()->check(CLI::NonNegativeNumber);

  std::string lambda;
  auto* eigen = app.add_subcommand("eigen", "eigenvalue of h_n on a Schur polynomial");
  eigen->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  eigen->add_option("--lambda", lambda, "partition, e.g. \"3,1,1\"")->required();
  eigen->add_option("--format", format)->check(CLI::IsMember(formats));

  bool show_states = false;
  auto* trees = app.add_subcommand("trees", "enumerate labeled binary trees BT(n)");
  trees->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  trees->add_flag("--show-states", show_states, "print each tree's Fock state");
  trees->add_flag("--force", force, "allow n above the size guard");

  std::string suite = "all";
  std::uint64_t seed = 1;
  int cases = 100;
  auto* validate = app.add_subcommand("validate", "randomized property suites");
  validate->add_option("--suite", suite)->check(CLI::IsMember({"fock", "bracket", "schur", "kdv", "all"}));
  validate->add_option("--seed", seed);
  validate->add_option("--cases", cases)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (hn->parsed()) {
      return run_hn(n, route, format, cache_dir, force);
    }
    if (bracket->parsed()) {
      return run_bracket(f_expr, g_expr, classical, rank, eta_file, format);
    }
    if (commute->parsed()) {
      return run_commute(max);
    }
    if (eigen->parsed()) {
      return run_eigen(n, lambda, format);
    }
    if (trees->parsed()) {
      return run_trees(n, show_states, force);
    }
    if (validate->parsed()) {
      return run_validate(suite, seed, cases);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
