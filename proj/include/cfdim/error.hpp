#pragma once

#include <stdexcept>
#include <string>

namespace cfdim {

// Domain and usage errors raised by the library (bad alphabet specs,
// invalid digits, log of zero, exceeded storage caps, ...).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cfdim
