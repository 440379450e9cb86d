#pragma once

#include <string>
#include <vector>

namespace hnk {

/// Verdict of one identity check. On failure carries the first
/// violating basis tuple in lexicographic scan order and both
/// evaluated sides; aggregate checks keep their breakdown in `sub`.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<std::string> witness;
  std::string lhs;
  std::string rhs;
  std::string detail;
  std::vector<CheckReport> sub;

  explicit operator bool() const { return pass; }

  static CheckReport ok(std::string name) {
    CheckReport r;
    r.check = std::move(name);
    return r;
  }

  static CheckReport fail(std::string name, std::vector<std::string> witness,
                          std::string lhs = {}, std::string rhs = {},
                          std::string detail = {}) {
    CheckReport r;
    r.check = std::move(name);
    r.pass = false;
    r.witness = std::move(witness);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.detail = std::move(detail);
    return r;
  }

  /// Pass iff all parts pass; detail names the first failing part.
  static CheckReport aggregate(std::string name,
                               std::vector<CheckReport> parts) {
    CheckReport r;
    r.check = std::move(name);
    for (const auto &p : parts)
      if (!p.pass && r.pass) {
        r.pass = false;
        r.detail = "failed sub-check: " + p.check;
      }
    r.sub = std::move(parts);
    return r;
  }
};

} // namespace hnk
