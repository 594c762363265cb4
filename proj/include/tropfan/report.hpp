#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tropfan {

/// "fail" means a checked property is false; "not certified" means an
/// existential hypothesis (for instance an ample class) could not be exhibited.
enum class Verdict { pass, fail, not_certified };

const char* to_string(Verdict v);

/// Structured outcome of a check: verdict, named values, witnesses and
/// nested sub-checks.
struct Report {
  std::string check;
  Verdict verdict = Verdict::pass;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  std::vector<Report> children;

  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  bool passed() const { return verdict == Verdict::pass; }

  void fail(std::string witness) {
    verdict = Verdict::fail;
    witnesses.push_back(std::move(witness));
  }
  void set(std::string key, std::string value) { values.emplace_back(std::move(key), std::move(value)); }
  void note(std::string text) { notes.push_back(std::move(text)); }

  /// Appends a child; a failing child fails the parent.
  void add(Report child);

  const std::string* value(const std::string& key) const;

  void write(std::ostream& os, int indent = 0) const;
};

}  // namespace tropfan
