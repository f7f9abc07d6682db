#ifndef SU2OPT_SOLVER_HPP
#define SU2OPT_SOLVER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "su2opt/word.hpp"

namespace su2opt {

/// A candidate word shape mandated by the regime's structure theory:
/// a generator pattern plus at most three free time parameters. Letters are
/// bound to a free parameter, to a fixed value, or to the coupled middle time
/// of a driving parameter (tan t_y = lambda tan t_x).
struct FamilyDescriptor {
  struct Binding {
    enum class Kind { Free, Fixed, CoupledMiddle };
    Kind kind = Kind::Free;
    int param = -1;      // Free / CoupledMiddle: index of the driving parameter
    double value = 0.0;  // Fixed
  };

  std::string tag;
  std::vector<Generator> pattern;
  std::vector<Binding> bindings;                // one per letter
  std::vector<std::array<double, 2>> windows;   // per free parameter, [lo, hi]
  int dim = 0;                                  // number of free parameters, <= 3
  Regime regime = Regime::KappaGt;
};

struct SolverConfig {
  double newton_tol = 1e-12;     // accepted residual norm
  int max_newton_iters = 50;
  int multistart_grid = 8;       // starts per free dimension
  double backtrack_factor = 0.5;
  int max_backtracks = 20;
  double dedup_tol = 1e-8;       // max-norm on parameter vectors
};

/// Candidate families for the frame's regime and lengths 1..max_len:
/// alternating patterns with the theorem windows and middle-time coupling,
/// plus (in KappaGt only) the three-letter W shapes {C1, W, C3} and their
/// degenerate sub-shapes. FreeY emits lengths <= 3 only.
std::vector<FamilyDescriptor> enumerate_families(const ControlFrame& frame, int max_len);

/// All matches of the family to the target: damped Gauss-Newton on
/// r(params) = log(eval(word) g^-1) from a fixed multistart grid, solutions
/// outside windows or positivity discarded, duplicates merged within
/// dedup_tol. Sorted by (cost, length, times). Empty when the family cannot
/// reach g.
std::vector<Decomposition> solve_family(const UnitQuaternion& g, const FamilyDescriptor& fam,
                                        const ControlFrame& frame, const SolverConfig& cfg);

/// Minimum-cost decomposition over all families of length <= max_len.
/// max_len = 0 picks a regime-specific bound derived from the cheapest short
/// decomposition (middle times cost at least pi/2 each, so any incumbent cost
/// bounds the useful length). Ties break to the shorter word, then the
/// lexicographically smaller time vector. Empty only if no family matched.
std::optional<Decomposition> decompose(const UnitQuaternion& g, const ControlFrame& frame,
                                       const SolverConfig& cfg, int max_len = 0);

/// The automatic length budget used by decompose(.., max_len = 0).
int default_max_len(const UnitQuaternion& g, const ControlFrame& frame, const SolverConfig& cfg);

/// The five closed-form candidate shapes of the right-angle, equal-cost frame
/// (alpha = pi/2, kappa = 1), solved against g and sorted by cost:
///   cat-a  single letter, time in [0, 2 pi)
///   cat-b  two letters, times in (0, pi]
///   cat-c  C1 C2 C1 with the middle time in [pi/2, pi]
///   cat-d  C1 C2 C1 C2 with the two equal middle times in [pi/2, pi]
///   cat-e  C1 W C3 (W = X + Y here) and its degenerate sub-shapes
/// The front of the list realizes the same cost as decompose(g).
std::vector<Decomposition> catalog_right_angle_unit_cost(const UnitQuaternion& g, const SolverConfig& cfg);

}  // namespace su2opt

#endif
