#include "su2opt/json_io.hpp"

#include <stdexcept>

namespace su2opt {

Regime parse_regime(const std::string& s) {
  if (s == "KAPPA_GT") return Regime::KappaGt;
  if (s == "KAPPA_LT") return Regime::KappaLt;
  if (s == "KAPPA_EQ") return Regime::KappaEq;
  if (s == "FREE_Y") return Regime::FreeY;
  throw std::invalid_argument("unknown regime '" + s + "'");
}

void to_json(nlohmann::json& j, const Letter& l) {
  j = nlohmann::json{{"gen", to_string(l.gen)}, {"time", l.time}};
}

void from_json(const nlohmann::json& j, Letter& l) {
  l.gen = parse_generator(j.at("gen").get<std::string>());
  l.time = j.at("time").get<double>();
}

void to_json(nlohmann::json& j, const Word& w) { j = w.letters; }

void from_json(const nlohmann::json& j, Word& w) {
  w.letters = j.get<std::vector<Letter>>();
}

void to_json(nlohmann::json& j, const Decomposition& d) {
  j = nlohmann::json{{"word", d.word},
                     {"cost", d.cost},
                     {"residual", d.residual},
                     {"family", d.family},
                     {"regime", to_string(d.regime)}};
}

void from_json(const nlohmann::json& j, Decomposition& d) {
  d.word = j.at("word").get<Word>();
  d.cost = j.at("cost").get<double>();
  d.residual = j.at("residual").get<double>();
  d.family = j.at("family").get<std::string>();
  d.regime = parse_regime(j.at("regime").get<std::string>());
}

}  // namespace su2opt
