#pragma once

#include <stdexcept>
#include <string>

namespace qgw {

// generic precondition / contract violation
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// a Laurent window (or truncation order) was too small to certify the
// requested coefficient; distinct from an identity actually failing
struct window_error : error {
  explicit window_error(const std::string& msg) : error(msg) {}
};

}  // namespace qgw
