#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bandlab/linalg.hpp"

namespace bandlab {

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

/// A named piece of evidence attached to a verdict. Values are exact.
using WitnessValue = std::variant<bool, long, Rat, RVec, RMat, std::string>;

struct Witness {
  std::string name;
  WitnessValue value;
};

/// Three-valued verdict with the evidence needed to re-check it.
struct PredicateResult {
  Verdict verdict = Verdict::unknown;
  std::vector<Witness> witnesses;
  std::vector<std::string> justification;

  PredicateResult() = default;
  explicit PredicateResult(Verdict v) : verdict(v) {}

  bool yes() const { return verdict == Verdict::yes; }
  bool no() const { return verdict == Verdict::no; }
  bool unknown() const { return verdict == Verdict::unknown; }

  PredicateResult& with(std::string name, WitnessValue value) {
    witnesses.push_back({std::move(name), std::move(value)});
    return *this;
  }
  PredicateResult& because(std::string why) {
    justification.push_back(std::move(why));
    return *this;
  }

  /// First witness of the given name; throws std::out_of_range if absent
  /// or of another type.
  template <class T>
  const T& get(const std::string& name) const {
    for (const auto& w : witnesses) {
      if (w.name == name) {
        if (const T* p = std::get_if<T>(&w.value)) return *p;
      }
    }
    throw std::out_of_range("no witness named " + name);
  }
  bool has(const std::string& name) const {
    for (const auto& w : witnesses) {
      if (w.name == name) return true;
    }
    return false;
  }
};

}  // namespace bandlab
