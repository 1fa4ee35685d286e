#pragma once

#include <nlohmann/json.hpp>

#include "qcw/qpoly.hpp"
#include "qcw/qrat.hpp"

namespace qcw {

// QPoly <-> ["c0","c1",...] (decimal strings, ascending degree).
// QRat  <-> {"num":[...],"den":[...]}.
void to_json(nlohmann::json& j, const QPoly& p);
void from_json(const nlohmann::json& j, QPoly& p);
void to_json(nlohmann::json& j, const QRat& r);
void from_json(const nlohmann::json& j, QRat& r);

}  // namespace qcw
