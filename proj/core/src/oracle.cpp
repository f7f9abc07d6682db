#include "su2opt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace su2opt {

namespace {

constexpr double kAcceptResidual = 1e-7;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t restart_seed(std::uint64_t seed, const std::vector<Generator>& pattern, int restart) {
  std::uint64_t h = mix64(seed ^ (0xA5A5ULL + pattern.size()));
  for (Generator g : pattern) h = mix64(h ^ (static_cast<std::uint64_t>(g) + 1));
  return mix64(h ^ (static_cast<std::uint64_t>(restart) + 0x1000));
}

struct SearchSpace {
  std::vector<Su2Vector> vecs;
  std::vector<double> rates;
  std::vector<double> hi;  // per-letter box [0, hi)
};

SearchSpace make_space(const std::vector<Generator>& pattern, const ControlFrame& frame,
                       const OracleConfig& cfg) {
  SearchSpace sp;
  for (Generator g : pattern) {
    if (g == Generator::W && frame.regime() != Regime::KappaGt)
      throw std::domain_error("W letters are only admissible when kappa > cos(alpha)");
    sp.vecs.push_back(frame.control_vector(g));
    sp.rates.push_back(frame.cost_rate(g));
    double hi = cfg.time_box_hi;
    if (g == Generator::W) hi = std::min(hi, kTwoPi / norm(frame.control_vector(g)));
    sp.hi.push_back(hi);
  }
  return sp;
}

UnitQuaternion eval_times(const SearchSpace& sp, const std::vector<double>& t) {
  UnitQuaternion acc = UnitQuaternion::identity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    acc = acc * exp_su2(sp.vecs[i] * t[i]);
    if (i % 16 == 15) acc = acc.normalized();
  }
  return acc;
}

double cost_of(const SearchSpace& sp, const std::vector<double>& t) {
  double c = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) c += sp.rates[i] * t[i];
  return c;
}

// Coordinate pattern search with shrinking steps; greedy extension along an
// improving direction. Deterministic for a fixed starting point.
template <typename F>
void pattern_search(const F& f, std::vector<double>& t, const SearchSpace& sp, int max_sweeps,
                    double step0, double min_step) {
  const std::size_t d = t.size();
  double fcur = f(t);
  double step = step0;
  for (int sweep = 0; sweep < max_sweeps && step >= min_step; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i < d; ++i) {
      for (double dir : {+1.0, -1.0}) {
        const double cand = std::clamp(t[i] + dir * step, 0.0, sp.hi[i]);
        if (cand == t[i]) continue;
        const double old = t[i];
        t[i] = cand;
        const double fc = f(t);
        if (fc < fcur) {
          fcur = fc;
          improved = true;
          for (int ext = 0; ext < 32; ++ext) {  // ride the improving direction
            const double nxt = std::clamp(t[i] + dir * step, 0.0, sp.hi[i]);
            if (nxt == t[i]) break;
            const double prev = t[i];
            t[i] = nxt;
            const double fn = f(t);
            if (fn < fcur) {
              fcur = fn;
            } else {
              t[i] = prev;
              break;
            }
          }
          break;  // next coordinate
        }
        t[i] = old;
      }
    }
    if (!improved) step *= 0.5;
  }
}

std::optional<Decomposition> penalized_best(const UnitQuaternion& g,
                                            const std::vector<Generator>& pattern,
                                            const ControlFrame& frame, const OracleConfig& cfg,
                                            const std::string& tag) {
  const SearchSpace sp = make_space(pattern, frame, cfg);
  const std::size_t d = pattern.size();

  std::optional<Decomposition> best;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(restart_seed(cfg.seed, pattern, restart));
    std::vector<double> t(d);
    for (std::size_t i = 0; i < d; ++i)
      t[i] = std::uniform_real_distribution<double>(0.0, sp.hi[i])(rng);

    for (double rho : cfg.penalty_schedule) {
      const auto f = [&](const std::vector<double>& u) {
        const double r = distance(eval_times(sp, u), g);
        return cost_of(sp, u) + rho * r * r;
      };
      pattern_search(f, t, sp, cfg.local_steps, 0.4, 1e-9);
    }
    // Feasibility polish: the penalized optimum sits ~ rate/(2 rho) off the
    // constraint manifold, above the acceptance residual. Descending the
    // distance alone restores feasibility and moves the cost by O(residual).
    const auto feas = [&](const std::vector<double>& u) {
      const double r = distance(eval_times(sp, u), g);
      return r * r;
    };
    pattern_search(feas, t, sp, 400, 1e-3, 1e-12);

    const double resid = distance(eval_times(sp, t), g);
    if (!(resid < kAcceptResidual)) continue;
    const double cost = cost_of(sp, t);
    if (!best || cost < best->cost - 1e-15 ||
        (std::abs(cost - best->cost) <= 1e-15 && resid < best->residual)) {
      Word w;
      for (std::size_t i = 0; i < d; ++i) w.letters.push_back({pattern[i], t[i]});
      best = Decomposition{std::move(w), cost, resid, tag, frame.regime()};
    }
  }
  return best;
}

std::string pattern_tag(const std::vector<Generator>& pattern) {
  std::string s = "oracle:";
  for (Generator g : pattern) s += to_string(g);
  return s;
}

bool better(const Decomposition& a, const Decomposition& b) {
  if (a.cost < b.cost - 1e-12) return true;
  if (a.cost > b.cost + 1e-12) return false;
  return a.word.size() < b.word.size();
}

}  // namespace

std::optional<Decomposition> n_optimal(const UnitQuaternion& g, int n,
                                       const std::vector<Generator>& pattern,
                                       const ControlFrame& frame, const OracleConfig& cfg) {
  if (n < 1) throw std::invalid_argument("n_optimal requires n >= 1");
  if (static_cast<int>(pattern.size()) != n)
    throw std::invalid_argument("pattern length must equal n");
  for (Generator gen : pattern)
    if (gen == Generator::W) throw std::invalid_argument("n_optimal patterns use generators X and Y only");
  if (cfg.restarts < 1 || cfg.local_steps < 1) throw std::invalid_argument("oracle config must be positive");
  return penalized_best(g, pattern, frame, cfg, pattern_tag(pattern));
}

std::optional<Decomposition> infimum_estimate(const UnitQuaternion& g, const ControlFrame& frame,
                                              int max_n, const OracleConfig& cfg) {
  if (max_n < 1) throw std::invalid_argument("infimum_estimate requires max_n >= 1");

  std::optional<Decomposition> best;
  const auto consider = [&](std::optional<Decomposition> cand) {
    if (cand && (!best || better(*cand, *best))) best = std::move(cand);
  };

  const double identity_resid = distance(g, UnitQuaternion::identity());
  if (identity_resid < kAcceptResidual)
    consider(Decomposition{Word{}, 0.0, identity_resid, "oracle:empty", frame.regime()});

  for (int n = 1; n <= max_n; ++n)
    for (Generator start : {Generator::X, Generator::Y}) {
      if (n == 1 && start == Generator::Y) {
        consider(penalized_best(g, {Generator::Y}, frame, cfg, "oracle:Y"));
        continue;
      }
      std::vector<Generator> pattern;
      for (int i = 0; i < n; ++i)
        pattern.push_back(i % 2 == 0 ? start
                                     : (start == Generator::X ? Generator::Y : Generator::X));
      consider(penalized_best(g, pattern, frame, cfg, pattern_tag(pattern)));
    }

  if (frame.regime() == Regime::KappaGt) {
    const Generator X = Generator::X, Y = Generator::Y, W = Generator::W;
    for (Generator c1 : {X, Y})
      for (Generator c3 : {X, Y})
        consider(penalized_best(g, {c1, W, c3}, frame, cfg,
                                std::string("oracle:") + to_string(c1) + ".W." + to_string(c3)));
    for (Generator c : {X, Y}) {
      consider(penalized_best(g, {W, c}, frame, cfg, std::string("oracle:W.") + to_string(c)));
      consider(penalized_best(g, {c, W}, frame, cfg, std::string("oracle:") + to_string(c) + ".W"));
    }
    consider(penalized_best(g, {W}, frame, cfg, "oracle:W"));
  }
  return best;
}

}  // namespace su2opt
