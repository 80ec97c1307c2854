#include "qck_cli/commands.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "qck/errors.hpp"
#include "qck_cli/formats.hpp"

namespace qck::cli {

namespace {

// Runs a command body, mapping exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

void emit(const OptionalPath& path, const std::string& content, std::ostream& out) {
  if (path) {
    write_text_file(*path, content);
  } else {
    out << content;
  }
}

}  // namespace

double default_tolerance() {
  const char* env = std::getenv("QCK_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) {
    throw FormatError(std::string("QCK_DEFAULT_TOL: expected a positive number, got '") + env + "'");
  }
  return v;
}

int cmd_validate(const std::filesystem::path& input, double tol, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix m = matrix_from_json(read_json_file(input), input.string());
    const ValidationReport r = validate(m, tol);
    out << dump(report_to_json(r));
    return r.is_density_matrix() ? kSuccess : kDomainError;
  });
}

int cmd_ggm(int d, const OptionalPath& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(out_path, dump(basis_to_json(ggm_basis(d))), out);
    return kSuccess;
  });
}

int cmd_bloch_to(const std::filesystem::path& input, const OptionalPath& out_path, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix m = matrix_from_json(read_json_file(input), input.string());
    if (m.rows() < 2) throw DomainError("bloch: dimension must be >= 2");
    if (!is_hermitian(m, default_tolerance())) throw PreconditionError("bloch: matrix is not Hermitian");
    emit(out_path, dump(bloch_to_json(to_bloch(m, ggm_basis(static_cast<int>(m.rows()))))), out);
    return kSuccess;
  });
}

int cmd_bloch_from(const std::filesystem::path& input, const OptionalPath& out_path, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const BlochVector tau = bloch_from_json(read_json_file(input), input.string());
    const ComplexMatrix m = from_bloch(tau, ggm_basis(tau.d));
    emit(out_path, dump(matrix_to_json(m)), out);
    if (!validate(m, default_tolerance()).psd) err << "note: the resulting matrix is not positive semidefinite\n";
    return kSuccess;
  });
}

int cmd_spin1_sample(long long count, std::uint64_t seed, const OptionalPath& out_path, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    if (count <= 0) throw DomainError("spin1-sample: --count must be positive");
    const auto result = spin1::sample_physical(static_cast<std::size_t>(count), seed);
    Json summary;
    summary["count"] = result.states.size();
    summary["attempts"] = result.attempts;
    summary["acceptance_rate"] = result.acceptance_rate;
    const std::string csv = spin1_samples_csv(result.states);
    if (out_path) {
      write_text_file(*out_path, csv);
      out << summary.dump() << '\n';
    } else {
      out << csv;
      err << summary.dump() << '\n';
    }
    return kSuccess;
  });
}

int cmd_sector(int sites, const OptionalPath& csv_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto model = sectors::LatticeModel::periodic_chain(sites);
    const auto report = sectors::full_report(model);
    if (csv_path) write_text_file(*csv_path, sector_states_csv(model, report));
    out << dump(sector_report_to_json(report));
    return kSuccess;
  });
}

int cmd_optimize(const OptimizeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix h = matrix_from_json(read_json_file(args.hamiltonian), args.hamiltonian.string());
    if (h.rows() != args.d) {
      throw DimensionError("optimize: Hamiltonian has dim " + std::to_string(h.rows()) + ", expected " +
                           std::to_string(args.d));
    }
    const auto objective = vopt::Objective::linear(h, default_tolerance());
    const GgmBasis basis = ggm_basis(args.d);

    vopt::OptConfig cfg;
    cfg.step_size = args.step;
    cfg.max_iters = args.iters;
    cfg.seed = args.seed;
    cfg.grad_tol = args.grad_tol;

    BlochVector tau0 = bloch_origin(args.d);
    if (args.init == "random") {
      tau0 = vopt::random_interior_point(args.d, args.seed);
    } else if (args.init != "center") {
      throw DomainError("optimize: --init must be 'center' or 'random'");
    }

    const auto trajectory = vopt::optimize(objective, tau0, cfg, basis);
    emit(args.out_path, trajectory_csv(trajectory), out);

    Json summary;
    summary["final_objective"] = trajectory.iterates.back().objective;
    summary["min_eigenvalue"] = hermitian_eigenvalues(h)(0);
    summary["iterates"] = trajectory.iterates.size();
    summary["converged"] = trajectory.converged;
    (args.out_path ? out : err) << dump(summary);
    return kSuccess;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qck: constraint geometry of quantum state space"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  double tol = 0.0;
  auto* validate_cmd = app.add_subcommand("validate", "Check a matrix document against the density-matrix constraints");
  validate_cmd->add_option("input", input, "Matrix document")->required();
  validate_cmd->add_option("--tol", tol, "Absolute tolerance (default 1e-10 or QCK_DEFAULT_TOL)");

  int d = 0;
  auto* ggm_cmd = app.add_subcommand("ggm", "Write the generalized Gell-Mann basis");
  ggm_cmd->add_option("--d", d, "Dimension (>= 2)")->required();
  ggm_cmd->add_option("--out", output, "Output file (stdout if omitted)");

  auto* bloch_cmd = app.add_subcommand("bloch", "Convert between matrix and Bloch-vector documents");
  bloch_cmd->require_subcommand(1);
  auto* bloch_to_cmd = bloch_cmd->add_subcommand("to", "Matrix document -> Bloch document");
  bloch_to_cmd->add_option("input", input, "Matrix document")->required();
  bloch_to_cmd->add_option("--out", output, "Output file (stdout if omitted)");
  auto* bloch_from_cmd = bloch_cmd->add_subcommand("from", "Bloch document -> matrix document");
  bloch_from_cmd->add_option("input", input, "Bloch document")->required();
  bloch_from_cmd->add_option("--out", output, "Output file (stdout if omitted)");

  long long count = 0;
  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand("spin1-sample", "Rejection-sample the spin-1 physical region as CSV");
  sample_cmd->add_option("--count", count, "Number of accepted states")->required();
  sample_cmd->add_option("--seed", seed, "Generator seed");
  sample_cmd->add_option("--out", output, "CSV file (stdout if omitted)");

  int sites = 0;
  std::string csv;
  auto* sector_cmd = app.add_subcommand("sector", "Gauss-law, charge and parity sector report");
  sector_cmd->add_option("--sites", sites, "Number of fermion sites (even, >= 2)")->required();
  sector_cmd->add_option("--csv", csv, "Also write the basis states of every sector as CSV");

  OptimizeArgs opt;
  std::string hamiltonian;
  auto* optimize_cmd = app.add_subcommand("optimize", "Projected gradient descent of Tr(rho H)");
  optimize_cmd->add_option("--d", opt.d, "Dimension")->required();
  optimize_cmd->add_option("--hamiltonian", hamiltonian, "Matrix document holding H")->required();
  optimize_cmd->add_option("--step", opt.step, "Step size");
  optimize_cmd->add_option("--iters", opt.iters, "Maximum iterations");
  optimize_cmd->add_option("--seed", opt.seed, "Seed for --init random");
  optimize_cmd->add_option("--init", opt.init, "Starting point: center or random");
  optimize_cmd->add_option("--grad-tol", opt.grad_tol, "Stopping tolerance");
  optimize_cmd->add_option("--out", output, "Trajectory CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kIoError;
  }

  const auto out_path = [&]() -> OptionalPath {
    if (output.empty()) return std::nullopt;
    return std::filesystem::path(output);
  };

  if (validate_cmd->parsed()) {
    double effective = tol;
    if (effective == 0.0) {
      try {
        effective = default_tolerance();
      } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
      }
    }
    if (!(effective > 0.0)) {
      err << "error: --tol must be positive\n";
      return kDomainError;
    }
    return cmd_validate(input, effective, out, err);
  }
  if (ggm_cmd->parsed()) return cmd_ggm(d, out_path(), out, err);
  if (bloch_to_cmd->parsed()) return cmd_bloch_to(input, out_path(), out, err);
  if (bloch_from_cmd->parsed()) return cmd_bloch_from(input, out_path(), out, err);
  if (sample_cmd->parsed()) return cmd_spin1_sample(count, seed, out_path(), out, err);
  if (sector_cmd->parsed()) {
    return cmd_sector(sites, csv.empty() ? OptionalPath{} : OptionalPath{csv}, out, err);
  }
  if (optimize_cmd->parsed()) {
    opt.hamiltonian = hamiltonian;
    opt.out_path = out_path();
    return cmd_optimize(opt, out, err);
  }
  return kIoError;
}

}  // namespace qck::cli
