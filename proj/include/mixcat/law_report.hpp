#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mixcat {

/// Outcome of checking one law over a batch of instances. Keeps the first
/// few failing instances verbatim.
struct LawResult {
  static constexpr std::size_t kMaxWitnesses = 8;

  LawResult() = default;
  LawResult(std::string suite_name, std::string law_name)
      : suite(std::move(suite_name)), law(std::move(law_name)) {}

  std::string suite;
  std::string law;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }

  /// Counts one instance; records the witness text on failure.
  void record(bool ok, const std::string& witness = {});
  template <class WitnessFn>
  void check(bool ok, WitnessFn&& witness) {
    ++instances;
    if (ok) return;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
  }
};

struct LawReport {
  std::string title;
  std::deque<LawResult> results;  // deque: references from add()/entry() stay valid

  bool passed() const;
  std::size_t failures() const;

  LawResult& add(std::string suite, std::string law);
  /// Existing entry for (suite, law), or a new one.
  LawResult& entry(const std::string& suite, const std::string& law);
  void append(const LawReport& other);

  /// One line per law: "PASS suite/law (n instances)" with indented witnesses.
  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace mixcat
