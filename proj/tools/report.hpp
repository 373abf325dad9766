#pragma once

#include <string>

#include "json.hpp"

#include "signrank/embeddings.hpp"
#include "signrank/enumeration.hpp"
#include "signrank/stabbing.hpp"

namespace signrank::cli {

/// Rounds to 12 significant digits so that serialized reports are stable.
double round12(double x);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const CensusResult& census);
nlohmann::json to_json(const CensusEstimate& estimate);
nlohmann::json to_json(const RowOrdering& ordering);

std::string to_text(const BoundReport& report);
std::string to_text(const CensusResult& census);
std::string to_text(const CensusEstimate& estimate);
std::string to_text(const RowOrdering& ordering);

}  // namespace signrank::cli
