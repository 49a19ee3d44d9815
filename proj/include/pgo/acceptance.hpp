#ifndef PGO_ACCEPTANCE_HPP
#define PGO_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>

namespace pgo {

struct AcceptanceReport {
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

/// Runs the full verification suite (one line per criterion) at the given
/// prime, plus the prime-independence re-run at the second prime.
AcceptanceReport run_acceptance(std::ostream& out, unsigned long prime = 5,
                                unsigned long second_prime = 13,
                                const std::string& fixtures_dir = "");

}  // namespace pgo

#endif  // PGO_ACCEPTANCE_HPP
