#include "qcw/report.hpp"

#include <sstream>

namespace qcw {

void VerifyReport::check(bool passed, std::string input, std::string expected, std::string actual) {
  ++checks;
  if (!passed) failures.push_back({std::move(input), std::move(expected), std::move(actual)});
}

void VerifyReport::merge(const VerifyReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite;
  for (const auto& [key, value] : parameters) os << " " << key << "=" << value;
  os << "\nchecks: " << checks << "\nfailures: " << failures.size() << "\n";
  for (const auto& f : failures) {
    os << "  FAIL " << f.input << ": expected " << f.expected << ", got " << f.actual << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  os << "status: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", suite}, {"parameters", params}, {"checks", checks},
          {"failures", fails}, {"notes", notes},       {"ok", ok()}};
}

}  // namespace qcw
