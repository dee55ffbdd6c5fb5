// drz: exact Drazin inverses and identity verification from the command line.
//
//   drz drazin <file>          Drazin-invert the matrix in <file>
//   drz verify ...             seeded identity campaigns, JSON report
//   drz oracle ...             exhaustive engine-vs-brute-force sweep
//   drz counterexample         fixed separating cases
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 usage or input error.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "drz/counterexample.hpp"
#include "drz/idempotents.hpp"
#include "drz/io.hpp"
#include "drz/oracle.hpp"
#include "drz/reports.hpp"
#include "drz/rings.hpp"
#include "drz/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kDimCap = 64;

template <drz::FieldScalar S>
int print_drazin(const drz::DrazinResult<drz::Matrix<S>>& r) {
  std::cout << "index: " << r.index << '\n';
  std::cout << "witness: " << r.witness << '\n';
  std::cout << "# a^D\n";
  drz::print_matrix(std::cout, r.d);
  std::cout << "# a^pi\n";
  drz::print_matrix(std::cout, r.pi);
  return kExitPass;
}

template <drz::Scalar S>
int print_scalar_drazin(const std::optional<drz::DrazinResult<S>>& r,
                        const drz::Domain& dom) {
  if (!r) {
    std::cout << "NotDrazinInvertible\n";
    return kExitMathFailure;
  }
  auto as_matrix = [&](const S& x) {
    return drz::Matrix<S>::from_entries(1, 1, dom, {x});
  };
  std::cout << "index: " << r->index << '\n';
  std::cout << "witness: " << r->witness << '\n';
  std::cout << "# a^D\n";
  drz::print_matrix(std::cout, as_matrix(r->d));
  std::cout << "# a^pi\n";
  drz::print_matrix(std::cout, as_matrix(r->pi));
  return kExitPass;
}

int cmd_drazin(const std::string& path) {
  drz::AnyMatrix any = drz::load_matrix_file(path);
  if (drz::any_rows(any) > kDimCap || drz::any_cols(any) > kDimCap)
    throw drz::UnsupportedDomain("matrices are capped at dimension " +
                                 std::to_string(kDimCap));
  return std::visit(
      [&](const auto& m) -> int {
        using S = std::decay_t<decltype(m(0, 0))>;
        if constexpr (drz::is_field_scalar_v<S>) {
          if (!m.is_square())
            throw drz::NotSquare("Drazin inversion needs a square matrix");
          return print_drazin(drz::drazin(m));
        } else if constexpr (std::is_same_v<S, drz::Int>) {
          if (m.rows() != 1 || m.cols() != 1)
            throw drz::UnsupportedDomain(
                "over Z only 1x1 matrices (scalars) are Drazin-invertible "
                "here; use Q or GF <p> for larger matrices");
          return print_scalar_drazin(drz::integer_drazin(m(0, 0)), m.domain());
        } else {
          if (m.rows() != 1 || m.cols() != 1)
            throw drz::UnsupportedDomain(
                "matrices over Zn support ring arithmetic only; Drazin "
                "inversion over Zn is scalar (1x1)");
          drz::ModularRing ring(m.domain().modulus());
          return print_scalar_drazin(ring.drazin(m(0, 0)), m.domain());
        }
      },
      any);
}

drz::Domain parse_domain_or_throw(const std::string& tag) {
  auto d = drz::Domain::from_tag(tag);
  if (!d)
    throw drz::ParseError("bad domain tag '" + tag +
                          "' (expected Q, GF:<p>, Zn:<n> or Z)");
  return *d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Drazin inverses over Q, GF(p), Zn and Z"};
  app.require_subcommand(1);

  std::string matrix_path;
  auto* drazin_cmd =
      app.add_subcommand("drazin", "Drazin inverse of the matrix in a file");
  drazin_cmd->add_option("file", matrix_path, "matrix text file")->required();

  std::string theorem_id, domain_tag;
  bool run_all = false;
  int dim = 0;
  int trials = 500;
  std::uint64_t seed = 0;
  auto* verify_cmd =
      app.add_subcommand("verify", "run seeded identity verification");
  verify_cmd->add_option("--theorem", theorem_id, "identity id, e.g. T3.5");
  verify_cmd->add_flag("--all", run_all, "verify the whole catalog");
  verify_cmd->add_option("--domain", domain_tag, "Q | GF:<p> | Zn:<n> | Z");
  verify_cmd->add_option("--dim", dim, "matrix dimension (1..64)");
  verify_cmd->add_option("--trials", trials, "trials per entry (default 500)");
  verify_cmd->add_option("--seed", seed, "campaign seed (default 0)");

  std::string oracle_domain;
  int oracle_dim = 0;
  bool exhaustive = false;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive engine vs brute-force sweep");
  oracle_cmd->add_option("--domain", oracle_domain, "GF:<p>")->required();
  oracle_cmd->add_option("--dim", oracle_dim, "matrix dimension")->required();
  oracle_cmd->add_flag("--exhaustive", exhaustive, "enumerate the whole ring");

  auto* counter_cmd = app.add_subcommand(
      "counterexample", "reproduce the fixed separating cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (drazin_cmd->parsed()) return cmd_drazin(matrix_path);

    if (verify_cmd->parsed()) {
      if (run_all == !theorem_id.empty()) {
        std::cerr << "error: pass exactly one of --theorem <id> or --all\n";
        return kExitUsage;
      }
      drz::CampaignOptions opts;
      if (!run_all) {
        auto id = drz::parse_theorem(theorem_id);
        if (!id) {
          std::cerr << "error: unknown theorem id '" << theorem_id << "'\n";
          return kExitUsage;
        }
        opts.theorems = {*id};
      }
      if (!domain_tag.empty()) {
        drz::Domain dom = parse_domain_or_throw(domain_tag);
        if (!opts.theorems.empty() &&
            !drz::theorem_supports(opts.theorems[0], dom)) {
          std::cerr << "error: " << drz::theorem_name(opts.theorems[0])
                    << " requires rationals (got " << dom.tag() << ")\n";
          return kExitUsage;
        }
        if (!dom.is_field()) {
          std::cerr << "error: verify needs a field domain (Q or GF:<p>)\n";
          return kExitUsage;
        }
        opts.domains = {dom};
      }
      if (verify_cmd->count("--dim")) {
        if (dim < 1 || dim > kDimCap) {
          std::cerr << "error: --dim must be in [1, " << kDimCap << "]\n";
          return kExitUsage;
        }
        opts.dims = {dim};
      }
      if (trials < 1) {
        std::cerr << "error: --trials must be positive\n";
        return kExitUsage;
      }
      opts.trials = trials;
      opts.seed = seed;
      auto reports = drz::run_campaign(opts);
      drz::Json out = drz::campaign_json(opts, reports);
      std::cout << out.dump(2) << '\n';
      return out["summary"]["pass"].get<bool>() ? kExitPass : kExitMathFailure;
    }

    if (oracle_cmd->parsed()) {
      if (!exhaustive) {
        std::cerr << "error: oracle requires --exhaustive\n";
        return kExitUsage;
      }
      drz::Domain dom = parse_domain_or_throw(oracle_domain);
      auto report = drz::run_oracle(dom, oracle_dim);
      std::cout << drz::to_json(report).dump(2) << '\n';
      return report.pass() ? kExitPass : kExitMathFailure;
    }

    if (counter_cmd->parsed()) {
      auto report = drz::run_counterexamples();
      std::cout << drz::to_json(report).dump(2) << '\n';
      return report.pass ? kExitPass : kExitMathFailure;
    }
  } catch (const drz::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
