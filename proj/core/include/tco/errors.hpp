#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tco {

/// An argument outside the domain of an operation (negative months,
/// invalid workload, sweep value out of range, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what, std::string field = {})
      : std::invalid_argument(what), field_(std::move(field)) {}

  /// Name of the offending input, when there is one.
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// One failed invariant on one catalog record.
struct Violation {
  std::string record_id;
  std::string rule;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class CatalogError : public std::runtime_error {
 public:
  enum class Kind { Parse, Reference, Constraint };

  CatalogError(Kind kind, const std::string& what,
               std::vector<Violation> violations = {})
      : std::runtime_error(what),
        kind_(kind),
        violations_(std::move(violations)) {}

  Kind kind() const { return kind_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  Kind kind_;
  std::vector<Violation> violations_;
};

}  // namespace tco
