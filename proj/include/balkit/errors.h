#ifndef BALKIT_ERRORS_H_
#define BALKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace balkit {

// An index or argument lies outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Identifier not present in the identity catalog.
class UnknownIdentityError : public std::invalid_argument {
 public:
  explicit UnknownIdentityError(const std::string& id)
      : std::invalid_argument("unknown identity id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Second index supplied to a unary statement, or missing for a binary one.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value handed to balancer_of / cobalancer_of is not a family member.
class NotAMemberError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unsupported report format tag.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal exactness guard failed (e.g. an odd coefficient where the
// algebra requires an even one). Always indicates a bug.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace balkit

#endif  // BALKIT_ERRORS_H_
