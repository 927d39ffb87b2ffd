#pragma once

#include <stdexcept>
#include <string>

namespace dieudonne {

// Raised when a result cannot be certified at the working precision p^N.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(const std::string& what, int recommended_precision)
      : std::runtime_error(what), recommended_(recommended_precision) {}

  int recommended_precision() const noexcept { return recommended_; }

 private:
  int recommended_;
};

class NotContained : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonStabilization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dieudonne
