#pragma once

#include <stdexcept>
#include <string>

namespace qroute {

/// Invalid input: malformed graph or circuit, variant mismatch,
/// out-of-range parameter, unparseable file.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qroute
