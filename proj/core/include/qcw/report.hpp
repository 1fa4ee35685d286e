#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace qcw {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

/// Outcome of one verification sweep. ok() is the only success signal.
struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t checks = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }

  void add_parameter(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
  /// Counts one check; records a failure when `passed` is false.
  void check(bool passed, std::string input, std::string expected, std::string actual);
  void note(std::string text) { notes.push_back(std::move(text)); }
  void merge(const VerifyReport& other);

  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace qcw
