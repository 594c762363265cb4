#include "tropfan/report.hpp"

namespace tropfan {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_certified: return "not-certified";
  }
  return "?";
}

void Report::add(Report child) {
  if (child.verdict == Verdict::fail)
    verdict = Verdict::fail;
  else if (child.verdict == Verdict::not_certified && verdict == Verdict::pass)
    verdict = Verdict::not_certified;
  children.push_back(std::move(child));
}

const std::string* Report::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return &v;
  return nullptr;
}

void Report::write(std::ostream& os, int indent) const {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << "check: " << check << '\n';
  os << pad << "status: " << to_string(verdict) << '\n';
  for (const auto& [k, v] : values) os << pad << "  " << k << ": " << v << '\n';
  for (const auto& w : witnesses) os << pad << "  witness: " << w << '\n';
  for (const auto& n : notes) os << pad << "  note: " << n << '\n';
  for (const auto& c : children) c.write(os, indent + 2);
}

}  // namespace tropfan
