#pragma once

#include <json.hpp>

#include "nakloc/tautilt.hpp"
#include "nakloc/verify.hpp"

namespace nakloc {

nlohmann::json localisation_json(const Localisation& loc);
nlohmann::json stt_json(const Algebra& a, const SupportTauTilting& s);
nlohmann::json modules_json(const Algebra& a, const ModuleList& m);
nlohmann::json verify_json(const VerifyReport& r);

}  // namespace nakloc
