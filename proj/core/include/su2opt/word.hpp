#ifndef SU2OPT_WORD_HPP
#define SU2OPT_WORD_HPP

#include <string>
#include <vector>

#include "su2opt/control_frame.hpp"
#include "su2opt/su2.hpp"

namespace su2opt {

/// One factor exp(time * control) of a word; time >= 0.
struct Letter {
  Generator gen = Generator::X;
  double time = 0.0;
};

/// Ordered product of letters. Reduced form: all times > 0 and adjacent
/// generators distinct. The empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

Word concat(const Word& u, const Word& v);

/// Left-to-right product of exp(time * control_vector). W letters throw
/// std::domain_error outside the KappaGt regime.
UnitQuaternion eval_word(const Word& w, const ControlFrame& frame);

/// Sum of cost_rate(gen) * time over the letters.
double word_cost(const Word& w, const ControlFrame& frame);

/// Drops zero-time letters and merges adjacent letters with equal generators.
/// Preserves eval_word and word_cost. Times are not wrapped mod a period:
/// a full period costs real time and must stay visible.
Word reduce(const Word& w);

/// Optional normalization: wraps each time into [0, period) for its letter
/// (2 pi for the unit controls, 2 pi / |W| for W), dropping full periods.
/// Preserves the evaluated product; the cost drops by the discarded periods.
Word normalize_periods(const Word& w, const ControlFrame& frame);

/// At most one letter with time >= pi, and if one exists it is a Y letter at
/// an end position. Expects a reduced word.
bool pi_condition(const Word& w);

/// pi_condition plus first and last times <= pi.
bool strong_pi_condition(const Word& w);

/// A solved candidate: a word, its cost, the distance from its product to the
/// target, the family it came from, and the frame regime.
struct Decomposition {
  Word word;
  double cost = 0.0;
  double residual = 0.0;
  std::string family;
  Regime regime = Regime::KappaGt;
};

}  // namespace su2opt

#endif
