#pragma once

#include <stdexcept>

namespace permdesign {

/// Thrown on contract violations: malformed input, degree mismatches,
/// out-of-range arguments, exceeded search caps.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace permdesign
