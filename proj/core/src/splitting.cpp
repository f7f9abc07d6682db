#include "su2opt/splitting.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace su2opt {

namespace {
constexpr int kMaxSteps = 4096;  // keeps product drift below the renormalization budget
constexpr double kExactLevel = 1e-14;

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("splitting requires N >= 1");
  if (n > kMaxSteps) throw std::invalid_argument("splitting N is capped at 4096");
}
}  // namespace

UnitQuaternion lie_trotter(const Su2Vector& a, const Su2Vector& b, int n) {
  check_n(n);
  const double inv = 1.0 / n;
  const UnitQuaternion step = exp_su2(a * inv) * exp_su2(b * inv);
  return pow_unit(step, n);
}

UnitQuaternion strang(const Su2Vector& a, const Su2Vector& b, int n) {
  check_n(n);
  const double inv = 1.0 / n;
  const UnitQuaternion half = exp_su2(a * (0.5 * inv));
  const UnitQuaternion step = half * exp_su2(b * inv) * half;
  return pow_unit(step, n);
}

ConvergenceTable convergence_table(const Su2Vector& a, const Su2Vector& b, const std::vector<int>& ns) {
  if (ns.empty()) throw std::invalid_argument("convergence_table needs at least one N");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 2) throw std::invalid_argument("convergence_table requires each N >= 2");
    if (i && ns[i] <= ns[i - 1]) throw std::invalid_argument("convergence_table requires increasing N");
  }

  const UnitQuaternion ref = exp_su2(a + b);
  ConvergenceTable table;
  for (int n : ns)
    table.rows.push_back({n, distance(lie_trotter(a, b, n), ref), distance(strang(a, b, n), ref)});

  const auto fit = [&](auto err_of) -> std::pair<double, bool> {
    bool exact = true;
    for (const auto& row : table.rows) exact = exact && err_of(row) < kExactLevel;
    if (exact || table.rows.size() < 2) return {std::numeric_limits<double>::quiet_NaN(), exact};
    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
      const double e0 = err_of(table.rows[i]);
      const double e1 = err_of(table.rows[i + 1]);
      if (e0 < kExactLevel || e1 < kExactLevel) continue;
      sum += std::log(e0 / e1) / std::log(double(table.rows[i + 1].n) / double(table.rows[i].n));
      ++count;
    }
    if (count == 0) return {std::numeric_limits<double>::quiet_NaN(), true};
    return {sum / count, false};
  };

  auto [to, te] = fit([](const ConvergenceRow& r) { return r.trotter_err; });
  auto [so, se] = fit([](const ConvergenceRow& r) { return r.strang_err; });
  table.trotter_order = to;
  table.trotter_exact = te;
  table.strang_order = so;
  table.strang_exact = se;
  return table;
}

void write_csv(const ConvergenceTable& table, std::ostream& os) {
  os << "N,trotter_err,strang_err\n";
  char buf[96];
  for (const auto& row : table.rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", row.n, row.trotter_err, row.strang_err);
    os << buf;
  }
}

WLimitWitness w_limit_witness(double t, const ControlFrame& frame, int n) {
  if (frame.regime() != Regime::KappaGt)
    throw std::domain_error("the singular W limit requires kappa > cos(alpha)");
  if (!(t >= 0.0)) throw std::invalid_argument("w_limit_witness requires t >= 0");
  check_n(n);

  const double wx = 1.0 - frame.kappa() * frame.cos_alpha();
  const double wy = frame.kappa() - frame.cos_alpha();
  const double tx = t * wx / n;
  const double ty = t * wy / n;
  const UnitQuaternion step = exp_su2(frame.x() * tx) * exp_su2(frame.y() * ty);
  const double step_cost = tx * 1.0 + frame.kappa() * ty;
  return {pow_unit(step, n), step_cost * n};
}

}  // namespace su2opt
