#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "salpeter/checks.hpp"
#include "salpeter/hydrogen.hpp"
#include "salpeter/perturbation.hpp"
#include "salpeter/reference.hpp"
#include "salpeter/solver.hpp"
#include "salpeter/table.hpp"

namespace {

using namespace salpeter;

struct OutputOptions {
  std::string format = "csv";
  std::string path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", out.path, "Output file (default: standard output)");
}

void emit(const PhysicalParams& params, std::vector<SpectrumEntry> levels,
          const OutputOptions& out) {
  std::string text;
  if (out.format == "json") {
    text = to_json(params, std::move(levels));
  } else {
    std::cerr << "params: alpha=" << format_double(params.alpha)
              << " mass=" << format_double(params.mass) << "\n";
    text = to_csv(std::move(levels));
  }
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out.path);
    file << text;
  }
}

int two_j_from_flag(double j) {
  const double doubled = 2.0 * j;
  const int two_j = static_cast<int>(std::lround(doubled));
  if (std::abs(doubled - two_j) > 1e-9 || two_j < 1 || two_j % 2 == 0)
    throw std::invalid_argument("--j must be a positive half-odd-integer (0.5, 1.5, ...)");
  return two_j;
}

CouplingSign sign_from_flag(const std::string& name) {
  if (name == "plus") return CouplingSign::Plus;
  if (name == "minus") return CouplingSign::Minus;
  throw std::invalid_argument("--sign must be plus or minus");
}

// All valid (n, l, 2j) triples with n <= n_max.
std::vector<QuantumNumbers> state_list(int n_max) {
  if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
  std::vector<QuantumNumbers> states;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l < n; ++l)
      for (int two_j : {2 * l - 1, 2 * l + 1})
        if (two_j >= 1) states.push_back(QuantumNumbers::make(n, l, two_j, 1));
  return states;
}

SpectrumEntry closed_form_entry(Method method, const QuantumNumbers& qn,
                                const PhysicalParams& params, CouplingSign sign) {
  SpectrumEntry e;
  e.method = method;
  e.n = qn.n;
  e.l = qn.l;
  e.two_j = qn.two_j;
  e.alpha = params.alpha;
  e.sign = sign;
  switch (method) {
    case Method::NonRel: e.binding = energy_nonrel(qn.n, params); break;
    case Method::Perturbative: e.binding = energy_alpha4(qn.n, qn.two_j, params); break;
    case Method::Dirac: e.binding = dirac_binding(qn.n, qn.two_j, params); break;
    case Method::KG:
      e.binding = kg_analytic_binding({qn.two_j, qn.l, qn.n - qn.l - 1, sign}, params);
      break;
    default: throw std::logic_error("closed_form_entry: not a closed-form method");
  }
  return e;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Relativistic square-root-Hamiltonian hydrogen toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  PhysicalParams params;
  app.add_option("--alpha", params.alpha, "Coupling constant")->capture_default_str();
  app.add_option("--mass", params.mass, "Particle mass")->capture_default_str();
  std::string sign_flag = "plus";
  app.add_option("--sign", sign_flag, "Coupling sign branch")
      ->check(CLI::IsMember({"plus", "minus"}));

  // spectrum: closed-form tables over a state range
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form binding energies");
  int spectrum_n_max = 3;
  std::string spectrum_method = "perturbative";
  OutputOptions spectrum_out;
  spectrum->add_option("--n-max", spectrum_n_max, "Largest principal quantum number")
      ->capture_default_str();
  spectrum->add_option("--method", spectrum_method, "Closed-form method")
      ->check(CLI::IsMember({"nonrel", "perturbative", "dirac", "kg"}))
      ->capture_default_str();
  add_output_flags(spectrum, spectrum_out);

  // dirac: exact Coulomb-Dirac levels
  auto* dirac = app.add_subcommand("dirac", "Exact Dirac binding energies");
  int dirac_n_max = 3;
  OutputOptions dirac_out;
  dirac->add_option("--n-max", dirac_n_max, "Largest principal quantum number")
      ->capture_default_str();
  add_output_flags(dirac, dirac_out);

  // kg: 2-spinor second-order-equation levels, analytic or iterative
  auto* kg = app.add_subcommand("kg", "Second-order 2-spinor equation levels");
  int kg_n_max = 3;
  int kg_basis = 0;
  OutputOptions kg_out;
  kg->add_option("--n-max", kg_n_max, "Largest principal quantum number")
      ->capture_default_str();
  kg->add_option("--basis-size", kg_basis,
                 "If > 0, solve the fixed point on a basis of this size instead of "
                 "using the analytic formula");
  add_output_flags(kg, kg_out);

  // solve: direct spectral solve of one channel
  auto* solve = app.add_subcommand("solve", "Spectral solve of sqrt(m^2+p^2) - alpha/r");
  double solve_j = 0.5;
  int solve_branch = 0, solve_N = 150, solve_l = 0;
  double solve_beta = 0.0;
  bool solve_spinless_flag = false;
  OutputOptions solve_out;
  solve->add_option("--j", solve_j, "Total angular momentum")->capture_default_str();
  solve->add_option("--branch", solve_branch, "Channel index: 0 (l=j-1/2) or 1 (l=j+1/2)")
      ->check(CLI::Range(0, 1))->capture_default_str();
  solve->add_option("--N", solve_N, "Basis size")->capture_default_str();
  solve->add_option("--beta", solve_beta, "Basis scale (<= 0: variational scan)");
  solve->add_flag("--spinless", solve_spinless_flag, "Spin-0 channel with c = l(l+1)");
  solve->add_option("--l", solve_l, "Orbital quantum number (spinless mode)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(solve, solve_out);

  // converge: basis-size study for one channel
  auto* converge = app.add_subcommand("converge", "Basis-size convergence study");
  double converge_j = 0.5;
  int converge_branch = 0, converge_level = 0;
  std::vector<int> converge_sizes = {100, 150, 200};
  OutputOptions converge_out;
  converge->add_option("--j", converge_j, "Total angular momentum")->capture_default_str();
  converge->add_option("--branch", converge_branch, "Channel index")
      ->check(CLI::Range(0, 1))->capture_default_str();
  converge->add_option("--sizes", converge_sizes, "Basis sizes, ascending")
      ->expected(2, 16);
  converge->add_option("--level", converge_level, "Level index within the channel")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  add_output_flags(converge, converge_out);

  // compare: all five methods for one state
  auto* compare = app.add_subcommand("compare", "All methods for one state");
  int compare_n = 1, compare_l = 0, compare_N = 150;
  double compare_j = 0.5, compare_beta = 0.0;
  OutputOptions compare_out;
  compare->add_option("--n", compare_n, "Principal quantum number")->capture_default_str();
  compare->add_option("--l", compare_l, "Orbital quantum number")->capture_default_str();
  compare->add_option("--j", compare_j, "Total angular momentum")->capture_default_str();
  compare->add_option("--N", compare_N, "Solver basis size")->capture_default_str();
  compare->add_option("--beta", compare_beta, "Solver basis scale (<= 0: scan)");
  add_output_flags(compare, compare_out);

  // scan-alpha: one method, one state, many couplings
  auto* scan = app.add_subcommand("scan-alpha", "Sweep the coupling for one state");
  std::vector<double> scan_alphas;
  std::string scan_method = "perturbative";
  int scan_n = 1, scan_l = 0, scan_N = 150;
  double scan_j = 0.5;
  OutputOptions scan_out;
  scan->add_option("--alphas", scan_alphas, "Coupling values")->required()->expected(1, 64);
  scan->add_option("--method", scan_method, "Method")
      ->check(CLI::IsMember({"nonrel", "perturbative", "dirac", "kg", "solver"}))
      ->capture_default_str();
  scan->add_option("--n", scan_n, "Principal quantum number")->capture_default_str();
  scan->add_option("--l", scan_l, "Orbital quantum number")->capture_default_str();
  scan->add_option("--j", scan_j, "Total angular momentum")->capture_default_str();
  scan->add_option("--N", scan_N, "Solver basis size")->capture_default_str();
  add_output_flags(scan, scan_out);

  // verify: all invariant suites
  auto* verify = app.add_subcommand("verify", "Run every invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  params.validate();
  const CouplingSign sign = sign_from_flag(sign_flag);

  if (*spectrum) {
    Method method = Method::Perturbative;
    if (spectrum_method == "nonrel") method = Method::NonRel;
    else if (spectrum_method == "dirac") method = Method::Dirac;
    else if (spectrum_method == "kg") method = Method::KG;
    std::vector<SpectrumEntry> levels;
    for (const auto& qn : state_list(spectrum_n_max))
      levels.push_back(closed_form_entry(method, qn, params, sign));
    emit(params, std::move(levels), spectrum_out);
  } else if (*dirac) {
    std::vector<SpectrumEntry> levels;
    for (const auto& qn : state_list(dirac_n_max))
      levels.push_back(closed_form_entry(Method::Dirac, qn, params, sign));
    emit(params, std::move(levels), dirac_out);
  } else if (*kg) {
    std::vector<SpectrumEntry> levels;
    for (const auto& qn : state_list(kg_n_max)) {
      SpectrumEntry e = closed_form_entry(Method::KG, qn, params, sign);
      if (kg_basis > 0) {
        const auto result =
            kg_iterative_solve({qn.two_j, qn.l, qn.n - qn.l - 1, sign}, params, kg_basis);
        e.binding = result.energy - params.mass;
        e.convergence_estimate = result.last_delta;
        std::cerr << "kg n=" << qn.n << " l=" << qn.l << " 2j=" << qn.two_j
                  << ": " << result.iterations << " iterations\n";
      }
      levels.push_back(e);
    }
    emit(params, std::move(levels), kg_out);
  } else if (*solve) {
    std::vector<SpectrumEntry> levels =
        solve_spinless_flag
            ? solve_spinless(solve_l, params, solve_N, solve_beta)
            : solve_channel(two_j_from_flag(solve_j), solve_branch, sign, params, solve_N,
                            solve_beta);
    if (levels.empty())
      std::cerr << "warning: no bound level found at this basis size\n";
    emit(params, std::move(levels), solve_out);
  } else if (*converge) {
    const int two_j = two_j_from_flag(converge_j);
    const auto study = convergence_study(two_j, converge_branch, sign, params,
                                         converge_sizes, {}, converge_level);
    for (const auto& row : study.rows)
      std::cerr << "N=" << row.basis_size << " beta=" << format_double(row.beta)
                << " binding=" << format_double(row.binding) << "\n";
    if (!study.monotone) std::cerr << "warning: bindings not variationally monotone\n";
    SpectrumEntry e;
    e.method = Method::SqrtSolver;
    e.l = converge_branch == 0 ? (two_j - 1) / 2 : (two_j + 1) / 2;
    e.n = e.l + 1 + converge_level;
    e.two_j = two_j;
    e.alpha = params.alpha;
    e.binding = study.best_binding;
    e.convergence_estimate = study.convergence_estimate;
    e.sign = sign;
    emit(params, {e}, converge_out);
  } else if (*compare) {
    CompareConfig config;
    config.basis_size = compare_N;
    config.beta = compare_beta;
    config.sign = sign;
    auto levels =
        compare_methods(compare_n, compare_l, two_j_from_flag(compare_j), params, config);
    for (size_t i = 0; i + 1 < levels.size(); ++i)
      for (size_t k = i + 1; k < levels.size(); ++k)
        std::cerr << "diff " << method_name(levels[i].method) << "-"
                  << method_name(levels[k].method) << " = "
                  << format_double(levels[i].binding - levels[k].binding) << "\n";
    emit(params, std::move(levels), compare_out);
  } else if (*scan) {
    const int two_j = two_j_from_flag(scan_j);
    const QuantumNumbers qn = QuantumNumbers::make(scan_n, scan_l, two_j, 1);
    std::vector<SpectrumEntry> levels;
    for (double alpha : scan_alphas) {
      PhysicalParams p{params.mass, alpha};
      p.validate();
      if (scan_method == "solver") {
        CompareConfig config;
        config.basis_size = scan_N;
        config.sign = sign;
        const auto rows = compare_methods(qn.n, qn.l, qn.two_j, p, config);
        levels.push_back(rows.back());
      } else {
        Method method = Method::Perturbative;
        if (scan_method == "nonrel") method = Method::NonRel;
        else if (scan_method == "dirac") method = Method::Dirac;
        else if (scan_method == "kg") method = Method::KG;
        levels.push_back(closed_form_entry(method, qn, p, sign));
      }
    }
    emit(params, std::move(levels), scan_out);
  } else if (*verify) {
    const auto results = run_all_checks();
    int passed = 0;
    for (const auto& r : results) {
      std::printf("[%s] %-28s metric=%.3e threshold=%.3e  %s\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.metric, r.threshold,
                  r.detail.c_str());
      if (r.passed) ++passed;
    }
    std::printf("%d/%zu suites passed\n", passed, results.size());
    if (passed != static_cast<int>(results.size())) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const salpeter::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
