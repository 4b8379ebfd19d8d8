#include "mixcat/pregroup.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace mixcat {

PregroupType parse_type(std::string_view text) {
  PregroupType out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto mark = token.find_first_of("^.");
    SimpleType t;
    t.basic = token.substr(0, mark);
    if (t.basic.empty()) throw ParseError("type token '" + token + "' has no basic type");
    for (char c : t.basic) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError("bad character '" + std::string(1, c) + "' in type token '" + token + "'");
      }
    }
    if (mark != std::string::npos) {
      const std::string adjoints = token.substr(mark + 1);
      if (adjoints.empty()) throw ParseError("type token '" + token + "' ends in an adjoint mark");
      for (char c : adjoints) {
        if (c == 'r') {
          ++t.z;
        } else if (c == 'l') {
          --t.z;
        } else {
          throw ParseError("adjoint '" + std::string(1, c) + "' in type token '" + token +
                           "' (expected r or l)");
        }
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string to_string(const SimpleType& t) {
  if (t.z == 0) return t.basic;
  return t.basic + "^" + std::string(static_cast<std::size_t>(t.z < 0 ? -t.z : t.z), t.z < 0 ? 'l' : 'r');
}

std::string to_string(const PregroupType& t) {
  if (t.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != 0) out += ' ';
    out += to_string(t[i]);
  }
  return out;
}

PregroupType concat(const std::vector<PregroupType>& types) {
  PregroupType out;
  for (const auto& t : types) out.insert(out.end(), t.begin(), t.end());
  return out;
}

bool contracts(const SimpleType& left, const SimpleType& right) {
  return left.basic == right.basic && right.z == left.z + 1;
}

PregroupType apply_reduction(const PregroupType& start, const Reduction& reduction) {
  PregroupType current = start;
  for (const auto& step : reduction.steps) {
    const auto p = step.position;
    if (p + 1 >= current.size() || !contracts(current[p], current[p + 1]) ||
        !(current[p] == step.left) || !(current[p + 1] == step.right)) {
      throw ParseError("step at position " + std::to_string(p) + " does not apply to " +
                       to_string(current));
    }
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(p),
                  current.begin() + static_cast<std::ptrdiff_t>(p) + 2);
  }
  return current;
}

namespace {

class Search {
 public:
  Search(const PregroupType& target, std::size_t limit) : target_(target), limit_(limit) {}

  /// True when at least one reduction was found below `current`.
  bool run(const PregroupType& current) {
    if (found_.size() >= limit_) return true;
    if (current == target_) {
      found_.push_back(Reduction{path_});
      return true;
    }
    if (current.size() <= target_.size() || dead_.contains(current)) return false;
    bool any = false;
    for (std::size_t p = 0; p + 1 < current.size(); ++p) {
      if (!contracts(current[p], current[p + 1])) continue;
      PregroupType next = current;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(p),
                 next.begin() + static_cast<std::ptrdiff_t>(p) + 2);
      path_.push_back(ContractionStep{p, current[p], current[p + 1]});
      any = run(next) || any;
      path_.pop_back();
      if (found_.size() >= limit_) return true;
    }
    if (!any) dead_.insert(current);
    return any;
  }

  std::vector<Reduction>& found() { return found_; }

 private:
  const PregroupType& target_;
  std::size_t limit_;
  std::vector<ContractionStep> path_;
  std::vector<Reduction> found_;
  std::set<PregroupType> dead_;
};

}  // namespace

std::optional<Reduction> parse(const std::vector<PregroupType>& types, const PregroupType& target) {
  auto found = all_reductions(types, target, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<Reduction> all_reductions(const std::vector<PregroupType>& types,
                                      const PregroupType& target, std::size_t limit) {
  if (limit == 0) return {};
  Search search(target, limit);
  search.run(concat(types));
  return std::move(search.found());
}

}  // namespace mixcat
