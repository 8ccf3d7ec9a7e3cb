#pragma once

// Pass/fail rows with witnesses, shared by every verification suite.

#include <sstream>
#include <string>
#include <vector>

#include "qhopf/tensor.hpp"

namespace qhopf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct SuiteReport {
  std::vector<CheckResult> rows;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& r : rows)
      if (r.name == name) return &r;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const auto* r = find(name);
    return r != nullptr && r->pass;
  }

  void add(std::string name, bool pass, std::string witness = {}) {
    rows.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
  }

  void append(const SuiteReport& other, const std::string& prefix = {}) {
    for (const auto& r : other.rows) rows.push_back({prefix + r.name, r.pass, r.witness});
  }

  std::string failures() const {
    std::string out;
    for (const auto& r : rows)
      if (!r.pass) out += (out.empty() ? "" : "; ") + r.name + " [" + r.witness + "]";
    return out;
  }
};

/// Compares two tensors exactly; on mismatch the witness names the first
/// differing multi-index and both coordinates there.
inline CheckResult compare(const std::string& name, const TensorElement& lhs, const TensorElement& rhs) {
  CheckResult r{name, true, {}};
  if (lhs.dim() != rhs.dim() || lhs.arity() != rhs.arity()) {
    r.pass = false;
    r.witness = "shape mismatch";
    return r;
  }
  const auto diff = first_difference(lhs, rhs);
  if (!diff) return r;
  r.pass = false;
  std::ostringstream w;
  w << "index (";
  const auto idx = lhs.unflatten(*diff);
  for (std::size_t s = 0; s < idx.size(); ++s) w << (s ? "," : "") << idx[s];
  w << "): lhs " << lhs.coeff(*diff).to_string() << ", rhs " << rhs.coeff(*diff).to_string();
  r.witness = w.str();
  return r;
}

inline void check(SuiteReport& rep, const std::string& name, const TensorElement& lhs, const TensorElement& rhs) {
  rep.rows.push_back(compare(name, lhs, rhs));
}

}  // namespace qhopf
