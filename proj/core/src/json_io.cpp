#include "qcw/json_io.hpp"

#include "qcw/errors.hpp"

namespace qcw {

void to_json(nlohmann::json& j, const QPoly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
}

void from_json(const nlohmann::json& j, QPoly& p) {
  if (!j.is_array()) throw InvalidArgument("QPoly JSON must be an array of decimal strings");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw InvalidArgument("QPoly coefficient must be a decimal string");
    const Rational value = Rational::parse(item.get<std::string>());
    if (!value.is_integer()) throw InvalidArgument("QPoly coefficient must be an integer");
    coeffs.push_back(value.num());
  }
  p = QPoly(std::move(coeffs));
}

void to_json(nlohmann::json& j, const QRat& r) { j = nlohmann::json{{"num", r.num()}, {"den", r.den()}}; }

void from_json(const nlohmann::json& j, QRat& r) {
  r = QRat(j.at("num").get<QPoly>(), j.at("den").get<QPoly>());
}

}  // namespace qcw
