#include "su2opt/word.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su2opt {

namespace {
constexpr double kPi = std::numbers::pi;

void check_letter(const Letter& l, const ControlFrame& frame) {
  if (!(l.time >= 0.0)) throw std::invalid_argument("letter time must be nonnegative");
  if (l.gen == Generator::W && frame.regime() != Regime::KappaGt)
    throw std::domain_error("W letters are only admissible when kappa > cos(alpha)");
}
}  // namespace

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

UnitQuaternion eval_word(const Word& w, const ControlFrame& frame) {
  UnitQuaternion acc = UnitQuaternion::identity();
  int count = 0;
  for (const Letter& l : w.letters) {
    check_letter(l, frame);
    acc = acc * exp_su2(frame.control_vector(l.gen) * l.time);
    if (++count % 16 == 0) acc = acc.normalized();
  }
  return acc;
}

double word_cost(const Word& w, const ControlFrame& frame) {
  double cost = 0.0;
  for (const Letter& l : w.letters) cost += frame.cost_rate(l.gen) * l.time;
  return cost;
}

Word reduce(const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (l.time == 0.0) continue;
    if (!out.letters.empty() && out.letters.back().gen == l.gen)
      out.letters.back().time += l.time;
    else
      out.letters.push_back(l);
  }
  return out;
}

Word normalize_periods(const Word& w, const ControlFrame& frame) {
  Word out;
  for (const Letter& l : w.letters) {
    const double vnorm = norm(frame.control_vector(l.gen));
    const double period = 2.0 * kPi / vnorm;
    double t = std::fmod(l.time, period);
    if (t < 0.0) t += period;
    out.letters.push_back({l.gen, t});
  }
  return reduce(out);
}

bool pi_condition(const Word& w) {
  int big = 0;
  std::size_t big_pos = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].time >= kPi) {
      ++big;
      big_pos = i;
    }
  }
  if (big == 0) return true;
  if (big > 1) return false;
  const bool terminal = big_pos == 0 || big_pos + 1 == w.letters.size();
  return terminal && w.letters[big_pos].gen == Generator::Y;
}

bool strong_pi_condition(const Word& w) {
  if (!pi_condition(w)) return false;
  if (w.letters.empty()) return true;
  return w.letters.front().time <= kPi && w.letters.back().time <= kPi;
}

}  // namespace su2opt
