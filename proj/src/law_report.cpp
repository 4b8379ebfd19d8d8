#include "mixcat/law_report.hpp"

#include <sstream>

namespace mixcat {

void LawResult::record(bool ok, const std::string& witness) {
  check(ok, [&] { return witness; });
}

bool LawReport::passed() const { return failures() == 0; }

std::size_t LawReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.failures;
  return n;
}

LawResult& LawReport::add(std::string suite, std::string law) {
  results.push_back(LawResult{std::move(suite), std::move(law)});
  return results.back();
}

LawResult& LawReport::entry(const std::string& suite, const std::string& law) {
  for (auto& r : results) {
    if (r.suite == suite && r.law == law) return r;
  }
  return add(suite, law);
}

void LawReport::append(const LawReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::string LawReport::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << "# " << title << "\n";
  for (const auto& r : results) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.suite << "/" << r.law << " (" << r.instances
       << " instances";
    if (!r.passed()) os << ", " << r.failures << " failed";
    os << ")\n";
    for (const auto& n : r.notes) os << "    note: " << n << "\n";
    for (const auto& w : r.witnesses) os << "    witness: " << w << "\n";
  }
  os << (passed() ? "all laws hold" : "some laws failed") << " (" << results.size()
     << " laws, " << failures() << " failures)\n";
  return os.str();
}

nlohmann::json LawReport::to_json() const {
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& r : results) {
    laws.push_back({{"suite", r.suite},
                    {"law", r.law},
                    {"instances", r.instances},
                    {"failures", r.failures},
                    {"passed", r.passed()},
                    {"notes", r.notes},
                    {"witnesses", r.witnesses}});
  }
  return {{"title", title}, {"passed", passed()}, {"laws", std::move(laws)}};
}

}  // namespace mixcat
