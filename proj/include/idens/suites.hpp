#ifndef IDENS_SUITES_HPP
#define IDENS_SUITES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "idens/certificate.hpp"

namespace idens {

struct CheckTally {
  std::string name;
  long pass = 0;
  long fail = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  long trials = 0;
  int workers = 1;
  std::vector<CheckTally> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.fail > 0) return false;
    return true;
  }
};

// Randomized property suites. Each trial draws its randomness from a
// stream derived from (seed, trial index), so tallies are identical for
// any worker count and reruns are byte-for-byte reproducible.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed, long trials,
                      int workers);

// Twenty single-field corruptions of a certificate, each violating a
// checked inequality; used by the certificates suite and the CLI.
std::vector<std::pair<std::string, SparsenessCertificate>> certificate_mutations(
    const SparsenessCertificate& cert);

}  // namespace idens

#endif
