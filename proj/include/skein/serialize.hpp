#pragma once

#include <json.hpp>

#include "skein/rational_function.hpp"

namespace skein {

/// [{qn, qd, t, cn, cd}, ...] in canonical order. Integers beyond 64 bits
/// are written as decimal strings.
nlohmann::json to_json(const LaurentQT& p);
LaurentQT laurent_from_json(const nlohmann::json& j);

/// {"num": [...], "den": [...]}
nlohmann::json to_json(const RationalQT& f);
RationalQT rational_function_from_json(const nlohmann::json& j);

}  // namespace skein
