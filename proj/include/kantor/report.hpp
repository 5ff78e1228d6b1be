#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kantor {

/// First counterexample of a failed identity sweep: the basis tuple plus
/// both evaluated sides, rendered exactly.
struct Witness {
  std::vector<size_t> tuple;
  std::string lhs;
  std::string rhs;
};

struct CheckItem {
  std::string name;
  bool passed = true;
  bool informational = false;  // verdict lines that do not gate pass/fail
  std::optional<Witness> witness;
  std::string note;
};

struct Report {
  std::string subject;
  std::string suite;
  std::vector<CheckItem> items;

  bool passed() const;
  void add_pass(const std::string& name);
  void add_fail(const std::string& name, Witness w);
  void add_item(const std::string& name, bool ok, std::optional<Witness> w);
  void add_info(const std::string& name, const std::string& note);

  /// Deterministic rendering, one line per item.
  std::string str() const;
};

}  // namespace kantor
