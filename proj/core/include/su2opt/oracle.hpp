#ifndef SU2OPT_ORACLE_HPP
#define SU2OPT_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "su2opt/word.hpp"

namespace su2opt {

/// Configuration of the brute-force estimator. The search is a penalty
/// method: minimize cost(t) + rho * distance(eval(t), g)^2 by derivative-free
/// pattern search (coordinate probes with shrinking steps) from seeded random
/// restarts, escalating rho through the schedule and finishing with a
/// feasibility polish on the distance alone. It shares no code path with the
/// Newton solver, so the two cross-validate honestly.
struct OracleConfig {
  int restarts = 64;
  std::array<double, 3> penalty_schedule{1e2, 1e4, 1e6};
  int local_steps = 500;                    // pattern-search sweeps per penalty stage
  double time_box_hi = 6.283185307179586;   // per-letter window [0, 2 pi)
  std::uint64_t seed = 12345;               // fixed default for reproducibility
};

/// Best admissible word of exactly this pattern (generators X/Y, length n)
/// matching g: an upper bound on the n-optimal cost that is tight in practice
/// through the restarts. Accepts only final residual < 1e-7. Empty when no
/// restart reaches that residual.
std::optional<Decomposition> n_optimal(const UnitQuaternion& g, int n,
                                       const std::vector<Generator>& pattern,
                                       const ControlFrame& frame, const OracleConfig& cfg);

/// Minimum over lengths n <= max_n of both alternating patterns (plus, when
/// kappa > cos alpha, the three-letter W shapes searched the same way, so the
/// singular limit is represented). Empty only if every pattern fails.
std::optional<Decomposition> infimum_estimate(const UnitQuaternion& g, const ControlFrame& frame,
                                              int max_n, const OracleConfig& cfg);

}  // namespace su2opt

#endif
