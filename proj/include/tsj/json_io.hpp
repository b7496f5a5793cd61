#pragma once

#include "tsj/mhsm.hpp"
#include "tsj/monrep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tsj {

/// Rationals serialize as "p/q" strings ("p" when q = 1), never as floats,
/// so round trips are bit-exact. Object keys are emitted sorted, making
/// repeated serialization byte-identical.

nlohmann::json mhsm_to_json(const Mhsm& m);
Mhsm mhsm_from_json(const nlohmann::json& j);

nlohmann::json monrep_to_json(const MonRep& r);
MonRep monrep_from_json(const nlohmann::json& j);

nlohmann::json spectral_pairs_to_json(const std::vector<SpectralPair>& sp);
std::string spectral_pairs_to_csv(const std::vector<SpectralPair>& sp);
std::string spectral_pairs_to_text(const std::vector<SpectralPair>& sp);

} // namespace tsj
