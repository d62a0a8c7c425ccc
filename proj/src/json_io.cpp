#include "eqsing/json_io.hpp"

#include <string>

namespace eqsing {

namespace {

template <class T>
nlohmann::json or_null(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json rep_class_or(const std::optional<RepClass>& c, nlohmann::json fallback) {
  return c ? nlohmann::json(std::string(to_string(*c))) : fallback;
}

}  // namespace

void to_json(nlohmann::json& j, const StabilityReport& r) {
  j = nlohmann::json{
      {"mu", r.mu},
      {"nu", r.nu},
      {"stable", r.stable},
      {"repclass", rep_class_or(r.repclass, nullptr)},
      {"det_char", r.det_char},
      {"rk", r.rk},
      {"corank_bound_ok", or_null(r.corank_bound_ok)},
      {"real_action", r.real_action},
  };
}

void to_json(nlohmann::json& j, const LoopReport& r) {
  j = nlohmann::json{
      {"m", r.m},
      {"m_prime", r.m_prime},
      {"mu", r.mu},
      {"nu", r.nu},
      {"repclass", rep_class_or(r.repclass, "skipped")},
      {"corank", r.corank},
      {"rk", r.rk},
      {"bound_ok", or_null(r.bound_ok)},
  };
}

void to_json(nlohmann::json& j, const HuntHit& h) { j = nlohmann::json{{"p", h.p}, {"d", h.d}}; }

void to_json(nlohmann::json& j, const ErdosStatistic& s) {
  j = nlohmann::json{
      {"threshold", s.threshold},
      {"prime_count", s.prime_count},
      {"above", s.above},
      {"fraction", s.fraction},
      {"above_big_omega", s.above_big_omega},
      {"fraction_big_omega", s.fraction_big_omega},
  };
}

void to_json(nlohmann::json& j, const CharacterMultiset& ms) {
  j = nlohmann::json::object();
  for (std::size_t c = 0; c < ms.mult.size(); ++c)
    if (ms.mult[c] != 0) j[std::to_string(c)] = ms.mult[c];
}

}  // namespace eqsing
