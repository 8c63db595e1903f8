#pragma once

#include <stdexcept>
#include <string>

namespace entrolab {

// All precondition and format violations surface as this type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entrolab
