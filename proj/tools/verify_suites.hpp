// verify_suites.hpp - randomized invariant sweeps behind `onset verify`.
// Each suite prints one line per check with the worst residual seen and the
// tolerance it was held to, and returns whether everything passed.
#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>

namespace onset::cli {

struct VerifyOptions {
    std::uint64_t seed = 20260818;
    std::size_t trials = 0;  // 0 picks the per-suite default
};

/// Onset identities on random product configurations: vanishing first
/// derivative, curvature against -4 (dA)^2 f_n for n in {2,3,4}, entropy
/// curvature against 2 (dA)^2 f_1, and the closed-system control.
bool verify_onset(const VerifyOptions& opt, std::ostream& out);

/// Variance bound, form equivalence, pure-state saturation, and
/// nonnegativity of the higher orders on random states and observables.
bool verify_bounds(const VerifyOptions& opt, std::ostream& out);

/// Closed forms against numerics for every worked scenario, truncation
/// convergence, the transient-coefficient fit, thermal limits, and the
/// normal-ordering and vacuum-overlap identities.
bool verify_scenarios(const VerifyOptions& opt, std::ostream& out);

}  // namespace onset::cli
