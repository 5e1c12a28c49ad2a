#include "hilb/errors.hpp"

namespace hilb {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

}  // namespace hilb
