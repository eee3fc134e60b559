#ifndef DPW_VERIFY_HPP
#define DPW_VERIFY_HPP

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dpw/partial_injection.hpp"

namespace dpw {

// Machine-checkable suites keyed to the structural results; the acceptance
// runner and the CLI `verify` command are both thin drivers over these.
//
// Per-check ranges follow the results themselves, clamped to [n_min, n_max]:
//   distances          n <= 9   closed form vs BFS on all pairs
//   characterization   n <= 7 exhaustive over I_n, n = 8 sampled;
//                      + the n = 4, 5 collapse onto DI_n; + Psi (n <= 6)
//   split              n <= 7   splitting-lemma sweep over DPW_n
//   green              minus n <= 7, full/union inventories n in 5..7,
//                      and the two J algorithms agree
//   generation         n <= 8   four generating sets vs enumeration; units
//   factorization      n <= 6 exhaustive, n = 7 sampled; the n = 4 identity
//   rank               exact at n = 4 (full) and n = 5 (minus); mechanized
//                      lower bounds: minus n in 5..8, full n in 5..7

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
  std::string name;
  int n = 0;
  CheckStatus status = CheckStatus::Fail;
  std::string details;
  std::optional<PartialInjection> witness;
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  std::string suite;
  int n_min = 0;
  int n_max = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  bool any_inconclusive() const;
};

struct VerifyOptions {
  int workers = 0;                           // 0: hardware concurrency
  std::uint64_t char_samples = 1'000'000;    // n = 8 characterization draws
  std::uint64_t factor_samples = 100'000;    // n = 7 factorization draws
  std::uint64_t rank_budget = 10'000'000;    // rank_exact candidate budget
};

SuiteReport verify_distances(int n_min, int n_max, const VerifyOptions& = {});
SuiteReport verify_characterization(int n_min, int n_max, const VerifyOptions& = {});
SuiteReport verify_split(int n_min, int n_max, const VerifyOptions& = {});
SuiteReport verify_green(int n_min, int n_max, const VerifyOptions& = {});
SuiteReport verify_generation(int n_min, int n_max, const VerifyOptions& = {});
SuiteReport verify_factorization(int n_min, int n_max, const VerifyOptions& = {});
SuiteReport verify_rank(int n_min, int n_max, const VerifyOptions& = {});
SuiteReport verify_all(int n_min, int n_max, const VerifyOptions& = {});

// deterministic payload; timings live in a separate envelope object
nlohmann::json report_to_json(const SuiteReport& r);

const char* status_name(CheckStatus s);

}  // namespace dpw

#endif  // DPW_VERIFY_HPP
