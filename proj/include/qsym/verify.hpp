#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsym/annulus.hpp"
#include "qsym/braiding.hpp"
#include "qsym/random.hpp"
#include "qsym/symmetric.hpp"
#include "qsym/transition.hpp"

namespace qsym {

struct CaseResult {
  std::string params;
  bool pass = false;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool overall = false;  // conjunction of the case results
};

struct VerifyCase {
  std::string params;
  std::function<bool()> run;
};

struct VerifyOptions {
  int max_n = 3;
  int max_N = 4;
  int jobs = 1;
};

/// Runs the cases (possibly in parallel) and assembles a report. Case order
/// in the report always matches the input order, regardless of jobs.
inline VerificationReport run_cases(std::string suite,
                                    std::vector<VerifyCase> cases, int jobs) {
  VerificationReport report;
  report.suite = std::move(suite);
  report.cases.resize(cases.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      const auto start = std::chrono::steady_clock::now();
      CaseResult result;
      result.params = cases[i].params;
      try {
        result.pass = cases[i].run();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        result.pass = false;
      }
      const auto stop = std::chrono::steady_clock::now();
      result.wall_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      report.cases[i] = std::move(result);
    }
  };

  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.overall = true;
  for (const auto& c : report.cases) report.overall = report.overall && c.pass;
  return report;
}

inline std::vector<VerifyCase> symfun_cases(const VerifyOptions& opt) {
  std::vector<VerifyCase> cases;
  for (SymfunIdentity id :
       {SymfunIdentity::middle_vanish, SymfunIdentity::branching,
        SymfunIdentity::palindrome, SymfunIdentity::e_from_f}) {
    for (int n = 1; n <= opt.max_n; ++n) {
      cases.push_back({std::string(to_string(id)) + " n=" + std::to_string(n),
                       [id, n]() { return verify_symfun_identity(id, n); }});
    }
  }
  return cases;
}

inline std::vector<VerifyCase> braiding_cases(const VerifyOptions&) {
  std::vector<VerifyCase> cases;
  for (BraidingIdentity id :
       {BraidingIdentity::weight_q, BraidingIdentity::weight_unit,
        BraidingIdentity::collect_leading, BraidingIdentity::collect_inverse}) {
    cases.push_back({std::string("symbolic ") + to_string(id),
                     [id]() { return verify_braiding_identity(id); }});
  }
  cases.push_back({"numeric sweep n<=25",
                   []() { return braiding_numeric_sweep(25); }});
  cases.push_back({"specialization soundness n<=12", []() {
                     for (long n = 1; n <= 12; ++n) {
                       for (long k = 1; k <= n; ++k) {
                         for (const QIntSpec& s : braiding_symbol_arguments()) {
                           auto [num, den] = specialize_qnk(qint_symbolic(s), n, k);
                           if (num != qint(s.value_at(n, k)) * den) return false;
                         }
                       }
                     }
                     return true;
                   }});
  return cases;
}

inline std::vector<VerifyCase> powerpoly_cases(const VerifyOptions& opt) {
  std::vector<VerifyCase> cases;
  for (int n = 1; n <= opt.max_n; ++n) {
    for (int N = 1; N <= opt.max_N; ++N) {
      cases.push_back(
          {"substitution identity n=" + std::to_string(n) + " N=" + std::to_string(N),
           [n, N]() { return verify_power_fundamental(n, N); }});
    }
  }
  for (int n = 1; n <= std::min(2, opt.max_n); ++n) {
    for (int N = 1; N <= opt.max_N; ++N) {
      cases.push_back(
          {"oracle agreement n=" + std::to_string(n) + " N=" + std::to_string(N),
           [n, N]() {
             for (int k = 1; k <= 2 * n; ++k) {
               if (symmetric_reduce(powered_alphabet_elementary(2 * n, N, k)) !=
                   power_elementary(n, N, k)) {
                 return false;
               }
             }
             return true;
           }});
    }
  }
  cases.push_back({"three-term recurrence N<=10", []() {
                     const VarTable f1 = fundamental_table(1);
                     const IntPoly gen = IntPoly::variable(f1, "f1");
                     if (power_fundamental(1, 1, 1) != gen) return false;
                     IntPoly two = IntPoly::constant(f1, Int(2));
                     if (power_fundamental(1, 2, 1) != gen * gen - two) return false;
                     for (int N = 2; N <= 10; ++N) {
                       if (power_fundamental(1, N + 1, 1) !=
                           gen * power_fundamental(1, N, 1) -
                               power_fundamental(1, N - 1, 1)) {
                         return false;
                       }
                     }
                     return true;
                   }});
  return cases;
}

inline std::vector<VerifyCase> annulus_cases(const VerifyOptions& opt) {
  std::vector<VerifyCase> cases;
  for (int n = 1; n <= opt.max_n; ++n) {
    cases.push_back({"loop image n=" + std::to_string(n),
                     [n]() { return verify_loop_image(n); }});
  }
  for (int n = 1; n <= opt.max_n; ++n) {
    for (int N = 1; N <= opt.max_N; ++N) {
      for (int k = 1; k <= n; ++k) {
        cases.push_back({"defect factorization n=" + std::to_string(n) +
                             " N=" + std::to_string(N) + " k=" + std::to_string(k),
                         [n, N, k]() {
                           if (!verify_defect_factorization(n, N, k)) return false;
                           return reduce_at_root(transparency_defect(n, N, k),
                                                 RootOfUnityContext{N})
                               .is_zero();
                         }});
      }
    }
  }
  cases.push_back({"mismatched-root control", []() {
                     // Reduction at the wrong modulus must not vanish.
                     const AnnulusElem defect = transparency_defect(1, 3, 1);
                     return !reduce_at_root(defect, RootOfUnityContext{2}).is_zero();
                   }});
  for (int n = 1; n <= std::min(3, opt.max_n); ++n) {
    for (int N = 1; N <= std::min(3, opt.max_N); ++N) {
      cases.push_back({"composition consistency n=" + std::to_string(n) +
                           " N=" + std::to_string(N),
                       [n, N]() { return verify_composition_consistency(n, N); }});
    }
  }
  return cases;
}

inline VerificationReport run_suite(const std::string& name,
                                    const VerifyOptions& opt) {
  std::vector<VerifyCase> cases;
  if (name == "symfun") {
    cases = symfun_cases(opt);
  } else if (name == "powerpoly") {
    cases = powerpoly_cases(opt);
  } else if (name == "braiding") {
    cases = braiding_cases(opt);
  } else if (name == "annulus") {
    cases = annulus_cases(opt);
  } else {
    throw usage_error("unknown suite '" + name + "'");
  }
  return run_cases(name, std::move(cases), opt.jobs);
}

/// Deterministic result lines go to `out`; per-case timing (which varies run
/// to run) goes to `timing`, normally stderr.
inline void print_report(const VerificationReport& report, std::ostream& out,
                         std::ostream* timing) {
  for (const auto& c : report.cases) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << report.suite << ": " << c.params
        << "\n";
    if (timing != nullptr) {
      *timing << std::fixed << std::setprecision(1) << report.suite << ": "
              << c.params << " took " << c.wall_ms << " ms\n";
    }
  }
  out << "suite " << report.suite << ": "
      << (report.overall ? "all cases passed" : "FAILED") << " ("
      << report.cases.size() << " cases)\n";
}

inline int exit_code_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.overall) return 1;
  }
  return 0;
}

}  // namespace qsym
