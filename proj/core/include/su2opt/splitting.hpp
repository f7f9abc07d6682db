#ifndef SU2OPT_SPLITTING_HPP
#define SU2OPT_SPLITTING_HPP

#include <iosfwd>
#include <vector>

#include "su2opt/control_frame.hpp"
#include "su2opt/su2.hpp"

namespace su2opt {

/// [exp(A/N) exp(B/N)]^N; first-order approximation of exp(A + B).
UnitQuaternion lie_trotter(const Su2Vector& a, const Su2Vector& b, int n);

/// [exp(A/2N) exp(B/N) exp(A/2N)]^N; symmetric splitting, second order.
UnitQuaternion strang(const Su2Vector& a, const Su2Vector& b, int n);

struct ConvergenceRow {
  int n = 0;
  double trotter_err = 0.0;
  double strang_err = 0.0;
};

/// Errors measured with the bi-invariant distance to exp(A + B); fitted order
/// is the mean of log(err_i / err_{i+1}) / log(n_{i+1} / n_i) over consecutive
/// rows. Commuting inputs drive the errors to rounding level, reported via the
/// exact flags (the orders are then meaningless and set to NaN).
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double trotter_order = 0.0;
  double strang_order = 0.0;
  bool trotter_exact = false;
  bool strang_exact = false;
};

ConvergenceTable convergence_table(const Su2Vector& a, const Su2Vector& b, const std::vector<int>& ns);

/// CSV with header N,trotter_err,strang_err; errors at 17 significant digits.
void write_csv(const ConvergenceTable& table, std::ostream& os);

/// The alternating word [exp((t wx / N) X) exp((t wy / N) Y)]^N with
/// wx = 1 - k cos a and wy = k - cos a, together with its cost. The product
/// converges to exp(t W); the cost is N-independent and equals
/// (k^2 - 2 k cos a + 1) t. Requires the KappaGt regime.
struct WLimitWitness {
  UnitQuaternion value;
  double cost = 0.0;
};

WLimitWitness w_limit_witness(double t, const ControlFrame& frame, int n);

}  // namespace su2opt

#endif
