#include "su2opt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "su2opt/optimality.hpp"

namespace su2opt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWindowSlack = 1e-9;
constexpr double kCostTie = 1e-12;
constexpr int kHardLengthCap = 16;

using Params = std::array<double, 3>;

Generator other(Generator g) { return g == Generator::X ? Generator::Y : Generator::X; }

std::vector<Generator> alternating(Generator start, int n) {
  std::vector<Generator> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i % 2 == 0) ? start : other(start);
  return p;
}

std::string pattern_string(const std::vector<Generator>& pattern, const char* sep = "") {
  std::string s;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) s += sep;
    s += to_string(pattern[i]);
  }
  return s;
}

double letter_time(const FamilyDescriptor& fam, std::size_t i, const Params& p, const ControlFrame& frame) {
  const auto& b = fam.bindings[i];
  switch (b.kind) {
    case FamilyDescriptor::Binding::Kind::Free: return p[static_cast<std::size_t>(b.param)];
    case FamilyDescriptor::Binding::Kind::Fixed: return b.value;
    case FamilyDescriptor::Binding::Kind::CoupledMiddle:
      return detail::middle_time_partner_extended(p[static_cast<std::size_t>(b.param)], frame);
  }
  return 0.0;
}

// Evaluation without the word-level admissibility checks: Newton iterates may
// probe negative times; those candidates are discarded at validation.
UnitQuaternion eval_family(const FamilyDescriptor& fam, const Params& p, const ControlFrame& frame) {
  UnitQuaternion acc = UnitQuaternion::identity();
  int count = 0;
  for (std::size_t i = 0; i < fam.pattern.size(); ++i) {
    acc = acc * exp_su2(frame.control_vector(fam.pattern[i]) * letter_time(fam, i, p, frame));
    if (++count % 16 == 0) acc = acc.normalized();
  }
  return acc;
}

std::optional<std::array<double, 3>> residual_of(const FamilyDescriptor& fam, const Params& p,
                                                 const ControlFrame& frame, const UnitQuaternion& g_inv) {
  const auto v = log_su2(eval_family(fam, p, frame) * g_inv);
  if (!v) return std::nullopt;  // antipode: discard rather than differentiate the branch point
  return std::array<double, 3>{v->x, v->y, v->z};
}

double norm3(const std::array<double, 3>& r) {
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

bool solve_linear(double a[3][3], const double rhs[3], double out[3], int d) {
  double m[3][4];
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m[i][j] = a[i][j];
    m[i][d] = rhs[i];
  }
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-300) return false;
    if (piv != col)
      for (int j = col; j <= d; ++j) std::swap(m[piv][j], m[col][j]);
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int j = col; j <= d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  for (int i = 0; i < d; ++i) out[i] = m[i][d] / m[i][i];
  return true;
}

struct Candidate {
  Params p{};
  double resid = 0.0;
};

std::optional<Candidate> newton_from(const FamilyDescriptor& fam, Params p, const ControlFrame& frame,
                                     const UnitQuaternion& g_inv, const SolverConfig& cfg) {
  const int d = fam.dim;
  auto r = residual_of(fam, p, frame, g_inv);
  if (!r) return std::nullopt;
  double rn = norm3(*r);

  for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
    if (rn < cfg.newton_tol) return Candidate{p, rn};

    // Jacobian by central differences; word evaluation is smooth in the times.
    constexpr double h = 1e-6;
    double jac[3][3] = {};
    for (int k = 0; k < d; ++k) {
      Params pp = p, pm = p;
      pp[static_cast<std::size_t>(k)] += h;
      pm[static_cast<std::size_t>(k)] -= h;
      const auto rp = residual_of(fam, pp, frame, g_inv);
      const auto rm = residual_of(fam, pm, frame, g_inv);
      if (!rp || !rm) return std::nullopt;
      for (int row = 0; row < 3; ++row) jac[row][k] = ((*rp)[row] - (*rm)[row]) / (2.0 * h);
    }

    // Gauss-Newton step (equals the Newton step when d = 3 and J is regular).
    double a[3][3] = {}, rhs[3] = {};
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j)
        for (int row = 0; row < 3; ++row) a[i][j] += jac[row][i] * jac[row][j];
      for (int row = 0; row < 3; ++row) rhs[i] -= jac[row][i] * (*r)[row];
      a[i][i] += 1e-14;
    }
    double delta[3] = {};
    if (!solve_linear(a, rhs, delta, d)) return std::nullopt;

    double scale = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
      Params q = p;
      for (int k = 0; k < d; ++k) q[static_cast<std::size_t>(k)] += scale * delta[k];
      const auto rq = residual_of(fam, q, frame, g_inv);
      if (rq) {
        const double rqn = norm3(*rq);
        if (rqn < rn) {
          p = q;
          r = rq;
          rn = rqn;
          accepted = true;
          break;
        }
      }
      scale *= cfg.backtrack_factor;
    }
    if (!accepted) break;
    for (int k = 0; k < d; ++k)
      if (std::abs(p[static_cast<std::size_t>(k)]) > 20.0) return std::nullopt;
  }
  if (rn < cfg.newton_tol) return Candidate{p, rn};
  return std::nullopt;
}

bool better(const Decomposition& a, const Decomposition& b) {
  if (a.cost < b.cost - kCostTie) return true;
  if (a.cost > b.cost + kCostTie) return false;
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  for (std::size_t i = 0; i < a.word.size(); ++i) {
    if (a.word.letters[i].time != b.word.letters[i].time)
      return a.word.letters[i].time < b.word.letters[i].time;
  }
  return false;
}

// --- family construction ---------------------------------------------------

FamilyDescriptor make_family(std::string tag, std::vector<Generator> pattern,
                             std::vector<FamilyDescriptor::Binding> bindings,
                             std::vector<std::array<double, 2>> windows, Regime regime) {
  FamilyDescriptor fam;
  fam.tag = std::move(tag);
  fam.pattern = std::move(pattern);
  fam.bindings = std::move(bindings);
  fam.windows = std::move(windows);
  fam.dim = static_cast<int>(fam.windows.size());
  fam.regime = regime;
  return fam;
}

FamilyDescriptor::Binding free_param(int idx) {
  return {FamilyDescriptor::Binding::Kind::Free, idx, 0.0};
}
FamilyDescriptor::Binding fixed_value(double v) {
  return {FamilyDescriptor::Binding::Kind::Fixed, -1, v};
}
FamilyDescriptor::Binding coupled_to(int idx) {
  return {FamilyDescriptor::Binding::Kind::CoupledMiddle, idx, 0.0};
}

// Middle-time window for a length-3 word; coupling only binds from length 4.
std::array<double, 2> middle3_window(Generator mid, Regime regime) {
  switch (regime) {
    case Regime::KappaGt: return {kHalfPi, kPi};
    case Regime::KappaLt:
    case Regime::KappaEq:
      return mid == Generator::Y ? std::array<double, 2>{kHalfPi, kPi}
                                 : std::array<double, 2>{0.0, kPi};
    case Regime::FreeY:
      return mid == Generator::Y ? std::array<double, 2>{0.0, kTwoPi - kWindowSlack}
                                 : std::array<double, 2>{0.0, kPi};
  }
  return {0.0, kPi};
}

void add_alternating(std::vector<FamilyDescriptor>& out, const ControlFrame& frame, Generator start, int n) {
  const Regime regime = frame.regime();
  auto pattern = alternating(start, n);
  const std::string base_tag = "alt" + std::to_string(n) + ":" + pattern_string(pattern);

  if (n == 1) {
    out.push_back(make_family(base_tag, pattern, {free_param(0)}, {{0.0, kTwoPi - kWindowSlack}}, regime));
    return;
  }

  // End windows: strong pi-condition in KappaGt caps both ends at pi. The
  // plain pi-condition lets one terminal Y reach [pi, 2 pi); with two Y ends
  // both placements are searched (one wide end per variant). Free Y letters
  // are exempt from the cost argument behind the condition, so FreeY keeps
  // every Y end wide.
  struct EndVariant {
    double first_hi, last_hi;
    const char* suffix;
  };
  std::vector<EndVariant> variants;
  const bool first_y = pattern.front() == Generator::Y;
  const bool last_y = pattern.back() == Generator::Y;
  const double wide = kTwoPi - kWindowSlack;
  if (regime == Regime::KappaGt) {
    variants.push_back({kPi, kPi, ""});
  } else if (regime == Regime::FreeY) {
    variants.push_back({first_y ? wide : kPi, last_y ? wide : kPi, ""});
  } else {
    if (!first_y && !last_y) variants.push_back({kPi, kPi, ""});
    if (first_y) variants.push_back({wide, kPi, last_y ? "/y0" : ""});
    if (last_y) variants.push_back({kPi, wide, first_y ? "/yn" : ""});
  }

  for (const auto& v : variants) {
    const std::string tag = base_tag + v.suffix;
    if (n == 2) {
      out.push_back(make_family(tag, pattern, {free_param(0), free_param(1)},
                                {{0.0, v.first_hi}, {0.0, v.last_hi}}, regime));
      continue;
    }
    if (n == 3) {
      out.push_back(make_family(tag, pattern, {free_param(0), free_param(1), free_param(2)},
                                {{0.0, v.first_hi}, middle3_window(pattern[1], regime), {0.0, v.last_hi}},
                                regime));
      continue;
    }

    // n >= 4: ends free, one driving middle parameter, the other middle
    // generator coupled (KappaGt / KappaLt) or pinned to pi/2 (KappaEq).
    std::vector<FamilyDescriptor::Binding> bindings(pattern.size());
    bindings.front() = free_param(0);
    bindings.back() = free_param(2);
    std::array<double, 2> driver_window{};
    if (regime == Regime::KappaEq) {
      driver_window = {kHalfPi, kPi};  // the shared middle Y time
      for (std::size_t i = 1; i + 1 < pattern.size(); ++i)
        bindings[i] = pattern[i] == Generator::X ? fixed_value(kHalfPi) : free_param(1);
    } else {
      driver_window = regime == Regime::KappaGt ? std::array<double, 2>{kHalfPi, kPi}
                                                : std::array<double, 2>{0.0, kHalfPi};
      for (std::size_t i = 1; i + 1 < pattern.size(); ++i)
        bindings[i] = pattern[i] == Generator::X ? free_param(1) : coupled_to(1);
    }
    out.push_back(make_family(tag, pattern, std::move(bindings),
                              {{0.0, v.first_hi}, driver_window, {0.0, v.last_hi}}, regime));
  }
}

void add_w_families(std::vector<FamilyDescriptor>& out, const ControlFrame& frame) {
  const double w_period = kTwoPi / norm(frame.w());
  const std::array<double, 2> w_window{0.0, w_period - kWindowSlack};
  const std::array<double, 2> end_window{0.0, kPi};
  const Regime regime = frame.regime();
  const Generator X = Generator::X, Y = Generator::Y, W = Generator::W;

  for (Generator c1 : {X, Y})
    for (Generator c3 : {X, Y}) {
      std::vector<Generator> pattern{c1, W, c3};
      out.push_back(make_family("w3:" + pattern_string(pattern, "."), pattern,
                                {free_param(0), free_param(1), free_param(2)},
                                {end_window, w_window, end_window}, regime));
    }
  for (Generator c : {X, Y}) {
    std::vector<Generator> head{W, c};
    out.push_back(make_family("w2:" + pattern_string(head, "."), head, {free_param(0), free_param(1)},
                              {w_window, end_window}, regime));
    std::vector<Generator> tail{c, W};
    out.push_back(make_family("w2:" + pattern_string(tail, "."), tail, {free_param(0), free_param(1)},
                              {end_window, w_window}, regime));
  }
  out.push_back(make_family("w1:W", {W}, {free_param(0)}, {w_window}, regime));
}

double cost_floor(const FamilyDescriptor& fam, const ControlFrame& frame) {
  double floor = 0.0;
  for (std::size_t i = 0; i < fam.pattern.size(); ++i) {
    const auto& b = fam.bindings[i];
    double lo = 0.0;
    switch (b.kind) {
      case FamilyDescriptor::Binding::Kind::Free: lo = fam.windows[static_cast<std::size_t>(b.param)][0]; break;
      case FamilyDescriptor::Binding::Kind::Fixed: lo = b.value; break;
      case FamilyDescriptor::Binding::Kind::CoupledMiddle: lo = kHalfPi; break;
    }
    floor += frame.cost_rate(fam.pattern[i]) * lo;
  }
  return floor;
}

std::optional<Decomposition> best_over(const UnitQuaternion& g, const std::vector<FamilyDescriptor>& fams,
                                       const ControlFrame& frame, const SolverConfig& cfg,
                                       std::optional<Decomposition> incumbent) {
  std::vector<std::size_t> order(fams.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<double> floors(fams.size());
  for (std::size_t i = 0; i < fams.size(); ++i) floors[i] = cost_floor(fams[i], frame);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return floors[a] < floors[b]; });

  std::optional<Decomposition> best = std::move(incumbent);
  for (std::size_t idx : order) {
    if (best && floors[idx] > best->cost + 1e-9) continue;  // cannot beat the incumbent
    for (auto& dec : solve_family(g, fams[idx], frame, cfg))
      if (!best || better(dec, *best)) best = std::move(dec);
  }
  return best;
}

int length_bound(const ControlFrame& frame, double budget) {
  // Middle times in the candidate classes cost at least pi/2 times the rate
  // of their generator, so a known cost bounds the useful length.
  const double k = frame.kappa();
  double bound = kHardLengthCap;
  switch (frame.regime()) {
    case Regime::KappaGt: {
      const double via_x = 3.0 + 4.0 * budget / kPi;  // middle X letters, rate 1
      bound = via_x;
      if (k > 1e-9) bound = std::min(bound, 2.0 + 4.0 * budget / (kPi * k));
      break;
    }
    case Regime::KappaLt: bound = 3.0 + 4.0 * budget / (kPi * k); break;
    case Regime::KappaEq: bound = 3.0 + 4.0 * budget / kPi; break;
    case Regime::FreeY: return 3;
  }
  const int n = static_cast<int>(std::ceil(bound));
  return std::clamp(n, 4, kHardLengthCap);
}

}  // namespace

std::vector<FamilyDescriptor> enumerate_families(const ControlFrame& frame, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  const int cap = frame.regime() == Regime::FreeY ? std::min(max_len, 3) : max_len;
  std::vector<FamilyDescriptor> out;
  for (int n = 1; n <= cap; ++n) {
    add_alternating(out, frame, Generator::X, n);
    if (n > 1) add_alternating(out, frame, Generator::Y, n);
    else out.push_back(make_family("alt1:Y", {Generator::Y}, {free_param(0)},
                                   {{0.0, kTwoPi - kWindowSlack}}, frame.regime()));
  }
  if (frame.regime() == Regime::KappaGt) add_w_families(out, frame);
  return out;
}

std::vector<Decomposition> solve_family(const UnitQuaternion& g, const FamilyDescriptor& fam,
                                        const ControlFrame& frame, const SolverConfig& cfg) {
  if (fam.dim < 1 || fam.dim > 3) throw std::invalid_argument("families carry 1..3 free parameters");
  if (fam.bindings.size() != fam.pattern.size())
    throw std::invalid_argument("family bindings must match its pattern");

  const UnitQuaternion g_inv = g.inverse();
  const int d = fam.dim;
  const int grid = std::max(1, cfg.multistart_grid);

  int total = 1;
  for (int k = 0; k < d; ++k) total *= grid;

  std::vector<Candidate> found;
  for (int idx = 0; idx < total; ++idx) {
    Params p{};
    int rem = idx;
    for (int k = 0; k < d; ++k) {
      const int cell = rem % grid;
      rem /= grid;
      const auto& w = fam.windows[static_cast<std::size_t>(k)];
      p[static_cast<std::size_t>(k)] = w[0] + (cell + 0.5) * (w[1] - w[0]) / grid;
    }

    auto cand = newton_from(fam, p, frame, g_inv, cfg);
    if (!cand) continue;

    bool inside = true;
    for (int k = 0; k < d && inside; ++k) {
      auto& w = fam.windows[static_cast<std::size_t>(k)];
      double& v = cand->p[static_cast<std::size_t>(k)];
      if (v < w[0] - kWindowSlack || v > w[1] + kWindowSlack) inside = false;
      else v = std::clamp(v, w[0], w[1]);
    }
    if (!inside) continue;

    const auto r = residual_of(fam, cand->p, frame, g_inv);
    if (!r) continue;
    cand->resid = norm3(*r);
    if (!(cand->resid < cfg.newton_tol)) continue;

    bool dup = false;
    for (auto& prev : found) {
      double dmax = 0.0;
      for (int k = 0; k < d; ++k)
        dmax = std::max(dmax, std::abs(prev.p[static_cast<std::size_t>(k)] - cand->p[static_cast<std::size_t>(k)]));
      if (dmax < cfg.dedup_tol) {
        dup = true;
        if (cand->resid < prev.resid) prev = *cand;
        break;
      }
    }
    if (!dup) found.push_back(*cand);
  }

  std::vector<Decomposition> out;
  out.reserve(found.size());
  for (const auto& c : found) {
    Word w;
    for (std::size_t i = 0; i < fam.pattern.size(); ++i)
      w.letters.push_back({fam.pattern[i], letter_time(fam, i, c.p, frame)});
    Word rw = reduce(w);
    const double cost = word_cost(rw, frame);
    out.push_back({std::move(rw), cost, c.resid, fam.tag, frame.regime()});
  }
  std::sort(out.begin(), out.end(), better);
  return out;
}

int default_max_len(const UnitQuaternion& g, const ControlFrame& frame, const SolverConfig& cfg) {
  if (frame.regime() == Regime::FreeY) return 3;
  for (int probe : {4, 6, 8}) {
    auto best = best_over(g, enumerate_families(frame, probe), frame, cfg, std::nullopt);
    if (best) return std::max(length_bound(frame, best->cost), probe);
  }
  return kHardLengthCap;
}

std::optional<Decomposition> decompose(const UnitQuaternion& g, const ControlFrame& frame,
                                       const SolverConfig& cfg, int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  std::optional<Decomposition> best;
  int budget = max_len;
  if (budget == 0) {
    if (frame.regime() == Regime::FreeY) {
      budget = 3;
    } else {
      for (int probe : {4, 6, 8}) {
        best = best_over(g, enumerate_families(frame, probe), frame, cfg, std::move(best));
        if (best) {
          budget = std::max(length_bound(frame, best->cost), probe);
          break;
        }
      }
      if (!best) budget = kHardLengthCap;
    }
  }
  return best_over(g, enumerate_families(frame, budget), frame, cfg, std::move(best));
}

std::vector<Decomposition> catalog_right_angle_unit_cost(const UnitQuaternion& g, const SolverConfig& cfg) {
  const ControlFrame frame(kHalfPi, 1.0);
  const Generator X = Generator::X, Y = Generator::Y, W = Generator::W;
  const std::array<double, 2> end{0.0, kPi};
  const std::array<double, 2> mid{kHalfPi, kPi};
  const std::array<double, 2> full{0.0, kTwoPi - kWindowSlack};
  const std::array<double, 2> w_window{0.0, kTwoPi / norm(frame.w()) - kWindowSlack};

  std::vector<FamilyDescriptor> fams;
  for (Generator c : {X, Y}) {
    const Generator o = other(c);
    fams.push_back(make_family(std::string("cat-a:") + to_string(c), {c}, {free_param(0)}, {full},
                               frame.regime()));
    fams.push_back(make_family(std::string("cat-b:") + to_string(c) + to_string(o), {c, o},
                               {free_param(0), free_param(1)}, {end, end}, frame.regime()));
    fams.push_back(make_family(std::string("cat-c:") + to_string(c) + to_string(o) + to_string(c),
                               {c, o, c}, {free_param(0), free_param(1), free_param(2)},
                               {end, mid, end}, frame.regime()));
    fams.push_back(make_family(std::string("cat-d:") + pattern_string(alternating(c, 4)),
                               alternating(c, 4),
                               {free_param(0), free_param(1), free_param(1), free_param(2)},
                               {end, mid, end}, frame.regime()));
  }
  for (Generator c1 : {X, Y})
    for (Generator c3 : {X, Y})
      fams.push_back(make_family(std::string("cat-e:") + to_string(c1) + ".W." + to_string(c3),
                                 {c1, W, c3}, {free_param(0), free_param(1), free_param(2)},
                                 {end, w_window, end}, frame.regime()));
  for (Generator c : {X, Y}) {
    fams.push_back(make_family(std::string("cat-e:W.") + to_string(c), {W, c},
                               {free_param(0), free_param(1)}, {w_window, end}, frame.regime()));
    fams.push_back(make_family(std::string("cat-e:") + to_string(c) + ".W", {c, W},
                               {free_param(0), free_param(1)}, {end, w_window}, frame.regime()));
  }
  fams.push_back(make_family("cat-e:W", {W}, {free_param(0)}, {w_window}, frame.regime()));

  std::vector<Decomposition> out;
  for (const auto& fam : fams)
    for (auto& dec : solve_family(g, fam, frame, cfg)) out.push_back(std::move(dec));
  std::sort(out.begin(), out.end(), better);
  return out;
}

}  // namespace su2opt
