#ifndef SU2OPT_JSON_IO_HPP
#define SU2OPT_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "su2opt/word.hpp"

namespace su2opt {

// Schema (version 1): a letter is {"gen": "X"|"Y"|"W", "time": t}, a word is
// an array of letters, a decomposition adds cost, residual, family and
// regime. Doubles round-trip bit-for-bit through the serializer.

void to_json(nlohmann::json& j, const Letter& l);
void from_json(const nlohmann::json& j, Letter& l);

void to_json(nlohmann::json& j, const Word& w);
void from_json(const nlohmann::json& j, Word& w);

void to_json(nlohmann::json& j, const Decomposition& d);
void from_json(const nlohmann::json& j, Decomposition& d);

Regime parse_regime(const std::string& s);

}  // namespace su2opt

#endif
