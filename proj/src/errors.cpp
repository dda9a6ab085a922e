#include "aztec/errors.hpp"

#include <cstdlib>
#include <string>

#include "aztec/limits.hpp"

namespace aztec {

CapacityError::CapacityError(std::string resource, long long requested,
                             long long limit)
    : std::runtime_error(resource + " " + std::to_string(requested) +
                         " exceeds cap " + std::to_string(limit)),
      resource_(std::move(resource)),
      requested_(requested),
      limit_(limit) {}

namespace {

void override_from(const char* name, int& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > 64) {
    throw std::invalid_argument(std::string(name) + ": expected an integer in [0, 64], got '" +
                                raw + "'");
  }
  slot = static_cast<int>(value);
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from("AZTEC_DENSE_CAP", limits.dense_cap);
  override_from("AZTEC_VECTOR_CAP", limits.vector_cap);
  override_from("AZTEC_ORACLE_SQUARES", limits.oracle_squares);
  override_from("AZTEC_MOSAIC_SQUARES", limits.mosaic_squares);
  return limits;
}

}  // namespace aztec
