#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

// Base class for all errors thrown by this library.  Every condition that a
// caller might reasonably want to catch separately gets its own subclass;
// the what() string always carries the offending values.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic / domain errors.
struct zero_quaternion_error : error {
  using error::error;
};
struct real_quaternion_error : error {
  using error::error;
};
struct central_quaternion_error : error {
  using error::error;
};
struct not_odd_prime_error : error {
  using error::error;
};
struct domain_error : error {
  using error::error;
};

// Generating-set and presentation errors.
struct not_a_generator_error : error {
  using error::error;
};
struct link_violation_error : error {
  using error::error;
};
struct alphabet_mismatch_error : error {
  using error::error;
};
struct side_mismatch_error : error {
  using error::error;
};

// Membership / factorisation errors.
struct not_admissible_error : error {
  using error::error;
};
struct no_factorization_error : error {
  using error::error;
};

// Coset enumeration errors.
struct table_not_closed_error : error {
  using error::error;
};

// Input parsing errors (quaternion literals, words, presentation files).
struct parse_error : error {
  using error::error;
};

}  // namespace qsc
