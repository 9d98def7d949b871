#ifndef QCALC_VERIFY_HPP
#define QCALC_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcalc/fsusy.hpp"
#include "qcalc/graded.hpp"

namespace qcalc {

/// Seed for randomized property suites: QCALC_SEED from the environment, or
/// a fixed default for reproducibility.
std::uint64_t default_seed();

struct VerifyOptions {
  int eq15_rmax = 12;
  std::uint64_t seed = default_seed();
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double ms = 0.0;
  double limit_s = 0.0;
  std::string detail;
  std::vector<nlohmann::json> records;
};

/// All criteria ids in order.
const std::vector<int>& all_criteria();

/// Maps a suite name (eq15, lemmas, fsusy, defcr, all) to criterion ids.
std::vector<int> suite_criteria(const std::string& suite);

CriterionResult run_criterion(int id, const VerifyOptions& opts);
std::vector<CriterionResult> run_suite(const std::string& suite,
                                       const VerifyOptions& opts);

/// Random words for the confluence suites (also used by unit tests).
Word random_generic_word(std::mt19937_64& rng, int max_len);
FsWord random_fs_word(std::mt19937_64& rng, int n, int max_len);

}  // namespace qcalc

#endif
