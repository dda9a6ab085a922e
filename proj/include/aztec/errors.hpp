#pragma once

#include <stdexcept>
#include <string>

namespace aztec {

// Raised when a request exceeds one of the configured resource caps. Nothing
// is attempted once this is thrown.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string resource, long long requested, long long limit);

  const std::string& resource() const noexcept { return resource_; }
  long long requested() const noexcept { return requested_; }
  long long limit() const noexcept { return limit_; }

 private:
  std::string resource_;
  long long requested_;
  long long limit_;
};

}  // namespace aztec
