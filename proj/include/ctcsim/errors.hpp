#ifndef CTCSIM_ERRORS_HPP
#define CTCSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctcsim {

// Thrown where a formula hits a pole (vanishing denominator), as opposed to
// an input that is merely outside its domain.
class SingularityError : public std::domain_error {
 public:
  explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

// Requested flux or effective speed falls outside the admissible window of
// the SQUID transmission line.
class FluxRangeError : public std::domain_error {
 public:
  explicit FluxRangeError(const std::string& what) : std::domain_error(what) {}
};

// A surface assembly was requested for parameters that do not close a
// timelike loop.
class CtcConditionError : public std::domain_error {
 public:
  explicit CtcConditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ctcsim

#endif  // CTCSIM_ERRORS_HPP
