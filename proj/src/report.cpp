#include "kantor/report.hpp"

#include <sstream>

namespace kantor {

bool Report::passed() const {
  for (const auto& it : items)
    if (!it.informational && !it.passed) return false;
  return true;
}

void Report::add_pass(const std::string& name) {
  items.push_back({name, true, false, std::nullopt, {}});
}

void Report::add_fail(const std::string& name, Witness w) {
  items.push_back({name, false, false, std::move(w), {}});
}

void Report::add_item(const std::string& name, bool ok, std::optional<Witness> w) {
  items.push_back({name, ok, false, std::move(w), {}});
}

void Report::add_info(const std::string& name, const std::string& note) {
  items.push_back({name, true, true, std::nullopt, note});
}

std::string Report::str() const {
  std::ostringstream os;
  os << "suite " << suite << " on " << subject << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& it : items) {
    if (it.informational) {
      os << "  [info] " << it.name << ": " << it.note << "\n";
      continue;
    }
    os << (it.passed ? "  [ ok ] " : "  [FAIL] ") << it.name;
    if (it.witness) {
      os << " at (";
      for (size_t i = 0; i < it.witness->tuple.size(); ++i) {
        if (i) os << ",";
        os << it.witness->tuple[i];
      }
      os << "): lhs=" << it.witness->lhs << " rhs=" << it.witness->rhs;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace kantor
