#pragma once

#include <string>

#include "json.hpp"

#include "cleanring/cleanness.hpp"
#include "cleanring/structure.hpp"

namespace cleanring::cli {

nlohmann::json decomposition_to_json(const FiniteRing& ring, const Decomposition& d);
nlohmann::json report_to_json(const FiniteRing& ring, const RingReport& report,
                              double construction_ms);
std::string report_to_text(const FiniteRing& ring, const RingReport& report,
                           double construction_ms);

// "J: 2 elements, nilpotent of class 2"
std::string radical_line(const Ideal& radical);

}  // namespace cleanring::cli
