#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "qsym/annulus.hpp"
#include "qsym/io.hpp"
#include "qsym/symmetric.hpp"
#include "qsym/transition.hpp"
#include "qsym/verify.hpp"

namespace qsym {

// Exit codes: 0 success / all verified, 1 a verification case failed,
// 2 usage or parse error, 3 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

namespace detail {

inline PolyFormat parse_format(const std::string& format) {
  if (format == "text") return PolyFormat::text;
  if (format == "json") return PolyFormat::json;
  throw usage_error("unknown format '" + format + "'");
}

}  // namespace detail

/// Command-line front end; returns the process exit code. Streams are
/// injectable so the contract is testable in-process.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"exact symplectic character polynomial calculator"};
  app.require_subcommand(1);

  int n = 1, N = 1, k = 1, jobs = 1;
  std::string format = "text";
  std::string suite = "all";
  bool at_root = false;
  bool sl = false;
  VerifyOptions opt;

  auto* qpoly = app.add_subcommand(
      "qpoly", "print the power fundamental polynomial in f1..fn");
  qpoly->add_option("--n", n, "rank")->required();
  qpoly->add_option("--N", N, "power")->required();
  qpoly->add_option("--k", k, "index (1..n)")->required();
  qpoly->add_option("--format", format, "text|json");

  auto* epoly = app.add_subcommand(
      "epoly", "print an elementary symmetric polynomial of the 2n-letter alphabet");
  epoly->add_option("--n", n, "rank")->required();
  epoly->add_option("--k", k, "index")->required();
  epoly->add_option("--N", N, "power the alphabet (default 1)");
  epoly->add_option("--format", format, "text|json");

  auto* fchar = app.add_subcommand(
      "fchar", "print a fundamental character polynomial");
  fchar->add_option("--n", n, "rank")->required();
  fchar->add_option("--k", k, "index")->required();
  fchar->add_option("--N", N, "power the alphabet (default 1)");
  fchar->add_option("--format", format, "text|json");

  auto* ppoly = app.add_subcommand(
      "ppoly", "print the power elementary polynomial in e1..e2n");
  ppoly->add_option("--n", n, "rank")->required();
  ppoly->add_option("--N", N, "power")->required();
  ppoly->add_option("--k", k, "index (0..2n)")->required();
  ppoly->add_flag("--sl", sl, "set e_{2n} = 1 (result in e1..e_{2n-1})");
  ppoly->add_option("--format", format, "text|json");

  auto* defect = app.add_subcommand(
      "defect", "print the transparency defect in the annulus ring");
  defect->add_option("--n", n, "rank")->required();
  defect->add_option("--N", N, "power")->required();
  defect->add_option("--k", k, "index (1..n)")->required();
  defect->add_flag("--at-root", at_root, "reduce modulo q^{2N} = 1");
  defect->add_option("--format", format, "text|json");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "symfun|powerpoly|braiding|annulus|all");
  verify->add_option("--max-n", opt.max_n, "largest rank (default 3)");
  verify->add_option("--max-N", opt.max_N, "largest power (default 4)");
  verify->add_option("--jobs", jobs, "parallel verification workers");

  try {
    std::vector<const char*> argv;
    argv.push_back("qsym");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const PolyFormat fmt = detail::parse_format(format);
    if (qpoly->parsed()) {
      out << render_poly(power_fundamental(n, N, k), fmt) << "\n";
      return kExitOk;
    }
    if (epoly->parsed()) {
      LambdaRing ring(n);
      out << render_poly(frobenius_power(elementary_symmetric(k, ring), N), fmt)
          << "\n";
      return kExitOk;
    }
    if (fchar->parsed()) {
      LambdaRing ring(n);
      out << render_poly(fundamental_character_power(k, N, ring), fmt) << "\n";
      return kExitOk;
    }
    if (ppoly->parsed()) {
      const IntPoly p =
          sl ? power_elementary_sl(n, N, k) : power_elementary(n, N, k);
      out << render_poly(p, fmt) << "\n";
      return kExitOk;
    }
    if (defect->parsed()) {
      AnnulusElem d = transparency_defect(n, N, k);
      if (at_root) d = reduce_at_root(d, RootOfUnityContext{N});
      out << render_poly(d, fmt) << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      if (jobs < 1) throw usage_error("--jobs must be >= 1");
      opt.jobs = jobs;
      std::vector<std::string> names;
      if (suite == "all") {
        names = {"symfun", "powerpoly", "braiding", "annulus"};
      } else {
        names = {suite};
      }
      std::vector<VerificationReport> reports;
      reports.reserve(names.size());
      for (const auto& name : names) {
        reports.push_back(run_suite(name, opt));
        print_report(reports.back(), out, &err);
      }
      return exit_code_for(reports);
    }
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const invariant_error& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qsym
