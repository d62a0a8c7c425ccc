#ifndef EQSING_JSON_IO_HPP
#define EQSING_JSON_IO_HPP

#include <json.hpp>

#include "eqsing/classify.hpp"
#include "eqsing/construct.hpp"
#include "eqsing/primes.hpp"

// JSON encodings used by the command-line tool. Field names are part of the
// tool's interface; see docs/json.md.
namespace eqsing {

void to_json(nlohmann::json& j, const StabilityReport& r);
void to_json(nlohmann::json& j, const LoopReport& r);
void to_json(nlohmann::json& j, const HuntHit& h);
void to_json(nlohmann::json& j, const ErdosStatistic& s);
void to_json(nlohmann::json& j, const CharacterMultiset& ms);

}  // namespace eqsing

#endif  // EQSING_JSON_IO_HPP
