#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nncalc {

struct SelfCheckReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

// Runs the cross-module invariant suite with reproducible sampling and
// writes one line per property to `log`. Covers: generator round trips,
// the induced field axioms, mixed-operation consistency, derivative and
// integral laws (Leibniz, additivity, both fundamental-theorem directions),
// exponential/logarithm homomorphisms, the deformed-line closed forms,
// weighted-mean properties, entropy identities, maxent stationarity, escort
// normalizations and the expansion-model equivalences.
SelfCheckReport run_selfcheck(std::uint64_t seed, std::ostream& log);

}  // namespace nncalc
