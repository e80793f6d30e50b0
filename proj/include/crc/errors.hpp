#pragma once

#include <stdexcept>
#include <string>

namespace crc {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByNonUnit : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnboundSymbol : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonTerminatingReduction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMetric : std::domain_error {
  using std::domain_error::domain_error;
};

struct InconsistentPairing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnderdeterminedDual : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a lookup falls outside the region a table is known to cover.
struct OutOfTableRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InconsistentDerivation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Underdetermined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedInstance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace crc
